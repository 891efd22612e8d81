use std::fmt;

use super::{Matrix, MatrixError};
use crate::ring::Ring;

/// `E_ij(value)`: the identity of degree `n` with `value` at `(row, col)`.
///
/// Indices are zero-based in code; `Display` and serialized files use
/// one-based indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ElementaryMatrix<E> {
    pub n: usize,
    pub row: usize,
    pub col: usize,
    pub value: E,
}

impl<E: Clone> ElementaryMatrix<E> {
    pub fn new(n: usize, row: usize, col: usize, value: E) -> Result<Self, MatrixError> {
        if row == col || row >= n || col >= n {
            return Err(MatrixError::BadElementaryIndex { n, row, col });
        }
        Ok(Self { n, row, col, value })
    }

    pub fn to_matrix<R: Ring<Elem = E>>(&self, ring: &R) -> Result<Matrix<R>, MatrixError> {
        let mut m = Matrix::identity(ring.clone(), self.n);
        m.set(self.row, self.col, self.value.clone())?;
        Ok(m)
    }

    /// `E_ij(-value)`.
    pub fn inverse<R: Ring<Elem = E>>(&self, ring: &R) -> Self {
        Self {
            value: ring.neg(&self.value),
            ..self.clone()
        }
    }

    /// Same operation in a larger degree, shifted down the diagonal by `offset`.
    pub fn embed(&self, n: usize, offset: usize) -> Self {
        assert!(self.n + offset <= n);
        Self {
            n,
            row: self.row + offset,
            col: self.col + offset,
            value: self.value.clone(),
        }
    }
}

impl<E: fmt::Display> fmt::Display for ElementaryMatrix<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E[{},{}]({})", self.row + 1, self.col + 1, self.value)
    }
}

/// Ordered product of elementary factors, starting from the identity.
pub fn product<R: Ring>(ring: &R, n: usize, factors: &[ElementaryMatrix<R::Elem>]) -> Result<Matrix<R>, MatrixError> {
    let mut acc = Matrix::identity(ring.clone(), n);
    for e in factors {
        acc = acc.mul(&e.to_matrix(ring)?)?;
    }
    Ok(acc)
}
