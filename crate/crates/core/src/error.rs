use thiserror::Error;

/// Failures of scalar and polynomial arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a unit")]
    NotAUnit(String),
    #[error("gcd of two zero elements is undefined")]
    BothZero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("polynomials use different variable lists")]
    VariableMismatch,
    #[error("resource guard tripped: {terms} terms exceeds the limit of {limit}")]
    ResourceGuard { terms: usize, limit: usize },
}

impl AlgebraError {
    pub fn parse(msg: impl Into<String>) -> Self {
        AlgebraError::Parse(msg.into())
    }
}
