use super::FactorError;
use crate::matrix::Matrix;
use crate::ring::Ring;

/// `diag(p, q, r) = l1 * u1 * l2 * u2` for block entries with `p*q*r = 1`,
/// with `l1, l2` lower and `u1, u2` upper unitriangular:
///
/// ```text
/// l1 = [[I,0,0],[p^-1,I,0],[0,q^-1,I]]^-1
/// u1 = [[I, I-p, 0],[0, I, I-pq],[0,0,I]]^-1
/// l2 = [[I,0,0],[I,I,0],[0,I,I]]
/// u2 = [[I, (I-p)q, 0],[0, I, (I-pq)r],[0,0,I]]
/// ```
#[derive(Clone, Debug, PartialEq)]
pub struct DVDecomposition<R: Ring> {
    pub l1: Matrix<R>,
    pub u1: Matrix<R>,
    pub l2: Matrix<R>,
    pub u2: Matrix<R>,
    pub diag_input: (Matrix<R>, Matrix<R>, Matrix<R>),
}

impl<R: Ring> DVDecomposition<R> {
    pub fn product(&self) -> Result<Matrix<R>, FactorError> {
        Ok(self.l1.mul(&self.u1)?.mul(&self.l2)?.mul(&self.u2)?)
    }

    pub fn diagonal(&self) -> Result<Matrix<R>, FactorError> {
        let (p, q, r) = &self.diag_input;
        let zero = Matrix::zeros(p.ring().clone(), p.rows(), p.rows());
        Ok(Matrix::from_blocks(vec![
            vec![p.clone(), zero.clone(), zero.clone()],
            vec![zero.clone(), q.clone(), zero.clone()],
            vec![zero.clone(), zero, r.clone()],
        ])?)
    }

    pub fn shapes_hold(&self) -> bool {
        self.l1.is_lower_unitriangular()
            && self.l2.is_lower_unitriangular()
            && self.u1.is_upper_unitriangular()
            && self.u2.is_upper_unitriangular()
    }

    pub fn verify(&self) -> bool {
        self.shapes_hold() && matches!((self.product(), self.diagonal()), (Ok(a), Ok(b)) if a == b)
    }
}

/// Decompose `diag(p, q, r)` where `p, q, r` are invertible square blocks
/// of one size (1x1 for scalars) with `p*q*r = I`.
pub fn dv_decompose<R: Ring>(p: &Matrix<R>, q: &Matrix<R>, r: &Matrix<R>) -> Result<DVDecomposition<R>, FactorError> {
    let b = p.rows();
    for m in [p, q, r] {
        if !m.is_square() || m.rows() != b {
            return Err(FactorError::WrongShape {
                expected: b,
                rows: m.rows(),
                cols: m.cols(),
            });
        }
    }
    let ring = p.ring().clone();
    let pq = p.mul(q)?;
    if !pq.mul(r)?.is_identity() {
        return Err(FactorError::NotUnitProduct);
    }
    let p_inv = p.inverse().map_err(|_| FactorError::NotInvertible("p"))?;
    let q_inv = q.inverse().map_err(|_| FactorError::NotInvertible("q"))?;
    let id = Matrix::identity(ring.clone(), b);
    let zero = Matrix::zeros(ring, b, b);
    let i_minus_p = id.sub(p)?;
    let i_minus_pq = id.sub(&pq)?;

    let lower = Matrix::from_blocks(vec![
        vec![id.clone(), zero.clone(), zero.clone()],
        vec![p_inv, id.clone(), zero.clone()],
        vec![zero.clone(), q_inv, id.clone()],
    ])?;
    let upper = Matrix::from_blocks(vec![
        vec![id.clone(), i_minus_p.clone(), zero.clone()],
        vec![zero.clone(), id.clone(), i_minus_pq.clone()],
        vec![zero.clone(), zero.clone(), id.clone()],
    ])?;
    let l2 = Matrix::from_blocks(vec![
        vec![id.clone(), zero.clone(), zero.clone()],
        vec![id.clone(), id.clone(), zero.clone()],
        vec![zero.clone(), id.clone(), id.clone()],
    ])?;
    let u2 = Matrix::from_blocks(vec![
        vec![id.clone(), i_minus_p.mul(q)?, zero.clone()],
        vec![zero.clone(), id.clone(), i_minus_pq.mul(r)?],
        vec![zero.clone(), zero, id],
    ])?;
    Ok(DVDecomposition {
        l1: lower.unitriangular_inverse()?,
        u1: upper.unitriangular_inverse()?,
        l2,
        u2,
        diag_input: (p.clone(), q.clone(), r.clone()),
    })
}

/// [`dv_decompose`] for units of the ring itself.
pub fn dv_decompose_scalars<R: Ring>(
    ring: &R,
    p: R::Elem,
    q: R::Elem,
    r: R::Elem,
) -> Result<DVDecomposition<R>, FactorError> {
    let wrap = |x: R::Elem| Matrix::new(ring.clone(), 1, 1, vec![x]);
    dv_decompose(&wrap(p)?, &wrap(q)?, &wrap(r)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingSpec;

    fn z(rows: &[&[i64]]) -> Matrix<RingSpec> {
        Matrix::from_i64_rows(RingSpec::Integers, rows).unwrap()
    }

    #[test]
    fn trivial_triple_gives_identities() {
        let ring = RingSpec::Integers;
        let one = ring.one();
        let d = dv_decompose_scalars(&ring, one.clone(), one.clone(), one).unwrap();
        // both upper factors collapse; the lower ones are mutually inverse
        assert!(d.u1.is_identity() && d.u2.is_identity());
        assert!(!d.l2.is_identity());
        assert!(d.l1.mul(&d.l2).unwrap().is_identity());
        assert!(d.verify());
    }

    #[test]
    fn one_minus_one_minus_one() {
        let ring = RingSpec::Integers;
        let d = dv_decompose_scalars(&ring, ring.from_i64(1), ring.from_i64(-1), ring.from_i64(-1)).unwrap();
        // closed forms multiplied out by hand
        assert_eq!(d.l1, z(&[&[1, 0, 0], &[-1, 1, 0], &[-1, 1, 1]]));
        assert_eq!(d.u1, z(&[&[1, 0, 0], &[0, 1, -2], &[0, 0, 1]]));
        assert_eq!(d.l2, z(&[&[1, 0, 0], &[1, 1, 0], &[0, 1, 1]]));
        assert_eq!(d.u2, z(&[&[1, 0, 0], &[0, 1, -2], &[0, 0, 1]]));
        assert_eq!(d.product().unwrap(), z(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, -1]]));
        assert!(d.verify());
    }

    #[test]
    fn rejects_bad_triples() {
        let ring = RingSpec::Integers;
        let r = dv_decompose_scalars(&ring, ring.from_i64(1), ring.from_i64(-1), ring.from_i64(1));
        assert_eq!(r, Err(FactorError::NotUnitProduct));
        let r = dv_decompose_scalars(&ring, ring.from_i64(2), ring.from_i64(1), ring.from_i64(1));
        assert_eq!(r, Err(FactorError::NotUnitProduct));
    }
}
