use super::field::{is_prime, CoeffField, ModP};
use super::Ring;
use crate::error::AlgebraError;

/// The prime field `F_p` with residues in `0..p`.
///
/// Not one of the euclidean [`super::RingSpec`] kinds; it backs the numeric
/// instances of symbolic identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    field: ModP,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, AlgebraError> {
        if is_prime(p) && p < (1 << 62) {
            Ok(Self { field: ModP(p) })
        } else {
            Err(AlgebraError::NotPrime(p))
        }
    }

    pub fn modulus(&self) -> u64 {
        self.field.0
    }
}

impl Ring for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        self.field.one()
    }
    fn from_i64(&self, n: i64) -> u64 {
        self.field.reduce_i64(n)
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        self.field.add(a, b)
    }
    fn neg(&self, a: &u64) -> u64 {
        self.field.neg(a)
    }
    fn mul(&self, a: &u64, b: &u64) -> Result<u64, AlgebraError> {
        Ok(self.field.mul(a, b))
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn contains(&self, a: &u64) -> bool {
        *a < self.field.0
    }
    fn unit_inverse(&self, a: &u64) -> Option<u64> {
        (*a != 0).then(|| self.field.inv(a))
    }
    fn exact_quotient(&self, a: &u64, b: &u64) -> Option<u64> {
        self.unit_inverse(b).map(|bi| self.field.mul(a, &bi))
    }
    fn is_integral_domain(&self) -> bool {
        true
    }
    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
    fn parse_elem(&self, s: &str) -> Result<u64, AlgebraError> {
        let n: num_bigint::BigInt = s
            .trim()
            .parse()
            .map_err(|_| AlgebraError::parse(format!("`{s}` is not an integer")))?;
        Ok(self.field.reduce_big(&n))
    }
    fn header(&self) -> String {
        format!("F{}", self.field.0)
    }
}
