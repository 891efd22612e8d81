use super::FactorError;
use crate::matrix::{ElementaryMatrix, Matrix};
use crate::ring::Ring;

/// `left * right * left^-1 * right^-1 = target`.
#[derive(Clone, Debug, PartialEq)]
pub struct CommutatorWitness<R: Ring> {
    pub left: Matrix<R>,
    pub right: Matrix<R>,
    pub target: Matrix<R>,
}

impl<R: Ring> CommutatorWitness<R> {
    pub fn commutator(&self) -> Result<Matrix<R>, FactorError> {
        let l_inv = self.left.inverse()?;
        let r_inv = self.right.inverse()?;
        Ok(self.left.mul(&self.right)?.mul(&l_inv)?.mul(&r_inv)?)
    }

    pub fn verify(&self) -> bool {
        self.commutator().is_ok_and(|c| c == self.target)
    }
}

/// `E_ij(r) = [E_ik(r), E_kj(1)]` with `k` the smallest index outside
/// `{i, j}`; needs degree at least 3.
pub fn elementary_as_commutator<R: Ring>(
    ring: &R,
    e: &ElementaryMatrix<R::Elem>,
) -> Result<CommutatorWitness<R>, FactorError> {
    if e.n < 3 {
        return Err(FactorError::TooSmall { n: e.n, min: 3 });
    }
    let k = (0..e.n).find(|&k| k != e.row && k != e.col).expect("n >= 3");
    let left = ElementaryMatrix::new(e.n, e.row, k, e.value.clone())?.to_matrix(ring)?;
    let right = ElementaryMatrix::new(e.n, k, e.col, ring.one())?.to_matrix(ring)?;
    Ok(CommutatorWitness {
        left,
        right,
        target: e.to_matrix(ring)?,
    })
}
