//! Constructive witnesses: elementary factorizations of `SL_n` over a
//! euclidean ring, elementary matrices as single commutators, and the
//! four-factor unitriangular decomposition of a diagonal matrix.

mod commutator;
mod dv;
mod sln;

use thiserror::Error;

pub use commutator::{elementary_as_commutator, CommutatorWitness};
pub use dv::{dv_decompose, dv_decompose_scalars, DVDecomposition};
pub use sln::{
    cl_upper_bound, cl_upper_bound_with_word, factor_sl2, factor_sln, sl2_diagonal_factors, FactorizationResult,
};

use crate::error::AlgebraError;
use crate::matrix::MatrixError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorError {
    #[error("determinant is {det}, not 1")]
    NotUnimodular { det: String },
    #[error("needs degree at least {min}, got {n}")]
    TooSmall { n: usize, min: usize },
    #[error("expected a {expected}x{expected} matrix, got {rows}x{cols}")]
    WrongShape { expected: usize, rows: usize, cols: usize },
    #[error("the product p*q*r is not the identity")]
    NotUnitProduct,
    #[error("{0} is not invertible")]
    NotInvertible(&'static str),
    #[error("the supplied word does not multiply to the matrix")]
    WordMismatch,
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
