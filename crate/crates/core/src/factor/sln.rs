use num_bigint::BigUint;

use super::FactorError;
use crate::matrix::{elementary, ElementaryMatrix, Matrix};
use crate::ring::{Ring, RingElement, RingSpec};

/// Elementary factors whose ordered product is `input`.
#[derive(Clone, Debug, PartialEq)]
pub struct FactorizationResult {
    pub ring: RingSpec,
    pub input: Matrix<RingSpec>,
    pub factors: Vec<ElementaryMatrix<RingElement>>,
}

impl FactorizationResult {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn product(&self) -> Result<Matrix<RingSpec>, FactorError> {
        Ok(elementary::product(&self.ring, self.input.rows(), &self.factors)?)
    }

    /// Recompute the product and compare with the input.
    pub fn verify(&self) -> bool {
        self.product().is_ok_and(|p| p == self.input)
    }
}

/// Working copy that records every elementary operation applied to it.
struct Reducer {
    ring: RingSpec,
    n: usize,
    a: Vec<Vec<RingElement>>,
    /// Row operations in the order applied: `a <- E * a`.
    left: Vec<ElementaryMatrix<RingElement>>,
    /// Column operations in the order applied: `a <- a * E`.
    right: Vec<ElementaryMatrix<RingElement>>,
}

impl Reducer {
    fn new(m: &Matrix<RingSpec>) -> Self {
        let n = m.rows();
        Self {
            ring: *m.ring(),
            n,
            a: (0..n).map(|i| m.row(i).to_vec()).collect(),
            left: Vec::new(),
            right: Vec::new(),
        }
    }

    /// Row `i` += `r` * row `j`.
    fn row_op(&mut self, i: usize, j: usize, r: RingElement) -> Result<(), FactorError> {
        if r.is_zero() {
            return Ok(());
        }
        for c in 0..self.n {
            let t = r.try_mul(&self.a[j][c])?;
            self.a[i][c] = self.a[i][c].try_add(&t)?;
        }
        self.left.push(ElementaryMatrix::new(self.n, i, j, r)?);
        Ok(())
    }

    /// Column `j` += `r` * column `i`.
    fn col_op(&mut self, i: usize, j: usize, r: RingElement) -> Result<(), FactorError> {
        if r.is_zero() {
            return Ok(());
        }
        for row in 0..self.n {
            let t = self.a[row][i].try_mul(&r)?;
            self.a[row][j] = self.a[row][j].try_add(&t)?;
        }
        self.right.push(ElementaryMatrix::new(self.n, i, j, r)?);
        Ok(())
    }

    /// Euclidean reduction of column `col` over rows `from..n` until a single
    /// nonzero entry remains; returns its row. The pivot is an entry of
    /// minimal norm, lowest row on ties.
    fn reduce_column(&mut self, col: usize, from: usize) -> Result<usize, FactorError> {
        loop {
            let nonzero: Vec<(usize, BigUint)> = (from..self.n)
                .filter_map(|i| self.a[i][col].norm().map(|nm| (i, nm)))
                .collect();
            let pivot = nonzero
                .iter()
                .min_by(|x, y| x.1.cmp(&y.1).then(x.0.cmp(&y.0)))
                .map(|x| x.0)
                .ok_or_else(|| FactorError::NotUnimodular { det: "0".into() })?;
            if nonzero.len() == 1 {
                return Ok(pivot);
            }
            for &(i, _) in &nonzero {
                if i == pivot {
                    continue;
                }
                let (q, _) = self.a[i][col].euclidean_divide(&self.a[pivot][col])?;
                self.row_op(i, pivot, q.neg())?;
            }
        }
    }

    /// Factors of the original matrix given that the working copy now
    /// equals `middle` (already factored).
    fn assemble(self, middle: Vec<ElementaryMatrix<RingElement>>) -> Vec<ElementaryMatrix<RingElement>> {
        let ring = self.ring;
        let mut out: Vec<_> = self.left.iter().map(|e| e.inverse(&ring)).collect();
        out.extend(middle);
        out.extend(self.right.iter().rev().map(|e| e.inverse(&ring)));
        out
    }
}

fn require_unimodular(m: &Matrix<RingSpec>) -> Result<(), FactorError> {
    let det = m.determinant()?;
    if m.ring().is_one(&det) {
        Ok(())
    } else {
        Err(FactorError::NotUnimodular { det: det.to_string() })
    }
}

fn push_nonzero(out: &mut Vec<ElementaryMatrix<RingElement>>, n: usize, i: usize, j: usize, v: RingElement) {
    if !v.is_zero() {
        out.push(ElementaryMatrix {
            n,
            row: i,
            col: j,
            value: v,
        });
    }
}

/// Six elementary factors of `diag(u, u^-1)` for a unit `u`, from
/// `[[0,u],[-u^-1,0]] = E12(u) E21(-u^-1) E12(u)` composed with the inverse
/// of the same form at `u = 1`. Empty when `u = 1`.
pub fn sl2_diagonal_factors(u: &RingElement) -> Result<Vec<ElementaryMatrix<RingElement>>, FactorError> {
    let ring = u.ring();
    let one = ring.one();
    if *u == one {
        return Ok(Vec::new());
    }
    let u_inv = u.unit_inverse()?;
    let m1 = one.neg();
    let mut out = Vec::with_capacity(6);
    for (i, j, v) in [
        (0, 1, u.clone()),
        (1, 0, u_inv.neg()),
        (0, 1, u.clone()),
        (0, 1, m1.clone()),
        (1, 0, one.clone()),
        (0, 1, m1),
    ] {
        push_nonzero(&mut out, 2, i, j, v);
    }
    Ok(out)
}

/// Factor a 2x2 matrix of determinant one into elementary matrices, driven
/// by the euclidean algorithm on the first column.
pub fn factor_sl2(m: &Matrix<RingSpec>) -> Result<FactorizationResult, FactorError> {
    if m.rows() != 2 || m.cols() != 2 {
        return Err(FactorError::WrongShape {
            expected: 2,
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    require_unimodular(m)?;
    let factors = factor_sl2_unchecked(m)?;
    Ok(FactorizationResult {
        ring: *m.ring(),
        input: m.clone(),
        factors,
    })
}

fn factor_sl2_unchecked(m: &Matrix<RingSpec>) -> Result<Vec<ElementaryMatrix<RingElement>>, FactorError> {
    let mut red = Reducer::new(m);
    while !red.a[0][0].is_zero() && !red.a[1][0].is_zero() {
        let pivot = if red.a[1][0].norm() < red.a[0][0].norm() { 1 } else { 0 };
        let other = 1 - pivot;
        let (q, _) = red.a[other][0].euclidean_divide(&red.a[pivot][0])?;
        red.row_op(other, pivot, q.neg())?;
    }
    let [[a, b], [_, d]] = [
        [red.a[0][0].clone(), red.a[0][1].clone()],
        [red.a[1][0].clone(), red.a[1][1].clone()],
    ];
    let mut tail = Vec::new();
    if a.is_zero() {
        // [[0, b], [-b^-1, d]] = [[0, b], [-b^-1, 0]] * E12(-b d)
        let b_inv = b.unit_inverse()?;
        push_nonzero(&mut tail, 2, 0, 1, b.clone());
        push_nonzero(&mut tail, 2, 1, 0, b_inv.neg());
        push_nonzero(&mut tail, 2, 0, 1, b.clone());
        push_nonzero(&mut tail, 2, 0, 1, b.try_mul(&d)?.neg());
    } else {
        // [[u, b], [0, u^-1]] = diag(u, u^-1) * E12(u^-1 b)
        let u_inv = a.unit_inverse()?;
        tail.extend(sl2_diagonal_factors(&a)?);
        push_nonzero(&mut tail, 2, 0, 1, u_inv.try_mul(&b)?);
    }
    Ok(red.assemble(tail))
}

/// Factor an `n x n` matrix of determinant one: reduce the first column to
/// a unit, normalise it to 1, clear the first row by column operations and
/// recurse on the trailing block down to 2x2.
pub fn factor_sln(m: &Matrix<RingSpec>) -> Result<FactorizationResult, FactorError> {
    if !m.is_square() {
        return Err(FactorError::WrongShape {
            expected: m.rows(),
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n < 2 {
        return Err(FactorError::TooSmall { n, min: 2 });
    }
    require_unimodular(m)?;
    if n == 2 {
        return factor_sl2(m);
    }
    let ring = *m.ring();
    let mut red = Reducer::new(m);
    for k in 0..n - 2 {
        let p = red.reduce_column(k, k)?;
        if p != k {
            red.row_op(k, p, ring.one())?;
            red.row_op(p, k, ring.one().neg())?;
        }
        let u = red.a[k][k].clone();
        if !ring.is_one(&u) {
            // left-multiply by diag(u^-1, u) on rows k, k+1
            let diag = sl2_diagonal_factors(&u.unit_inverse()?)?;
            for e in diag.iter().rev() {
                red.row_op(e.row + k, e.col + k, e.value.clone())?;
            }
        }
        for j in k + 1..n {
            let v = red.a[k][j].neg();
            red.col_op(k, j, v)?;
        }
    }
    let corner = Matrix::from_rows(
        ring,
        vec![
            vec![red.a[n - 2][n - 2].clone(), red.a[n - 2][n - 1].clone()],
            vec![red.a[n - 1][n - 2].clone(), red.a[n - 1][n - 1].clone()],
        ],
    )?;
    let middle = factor_sl2_unchecked(&corner)?
        .into_iter()
        .map(|e| e.embed(n, n - 2))
        .collect();
    let factors = red.assemble(middle);
    Ok(FactorizationResult {
        ring,
        input: m.clone(),
        factors,
    })
}

/// Upper bound on the commutator length of `m` in `SL_n`, `n >= 3`: the
/// number of elementary factors, since each one is a single commutator.
pub fn cl_upper_bound(m: &Matrix<RingSpec>) -> Result<usize, FactorError> {
    if m.rows() < 3 {
        return Err(FactorError::TooSmall { n: m.rows(), min: 3 });
    }
    Ok(factor_sln(m)?.len())
}

/// Like [`cl_upper_bound`], also accepting a known elementary word for `m`;
/// returns the smaller of the two counts after checking the word.
pub fn cl_upper_bound_with_word(
    m: &Matrix<RingSpec>,
    word: &[ElementaryMatrix<RingElement>],
) -> Result<usize, FactorError> {
    let bound = cl_upper_bound(m)?;
    if elementary::product(m.ring(), m.rows(), word)? != *m {
        return Err(FactorError::WordMismatch);
    }
    let nontrivial = word.iter().filter(|e| !e.value.is_zero()).count();
    Ok(bound.min(nontrivial))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(rows: &[&[i64]]) -> Matrix<RingSpec> {
        Matrix::from_i64_rows(RingSpec::Integers, rows).unwrap()
    }

    fn e(n: usize, i: usize, j: usize, v: i64) -> ElementaryMatrix<RingElement> {
        ElementaryMatrix::new(n, i, j, RingElement::int(v)).unwrap()
    }

    #[test]
    fn sl2_examples() {
        assert!(factor_sl2(&z(&[&[1, 0], &[0, 1]])).unwrap().is_empty());
        assert_eq!(
            factor_sl2(&z(&[&[1, 5], &[0, 1]])).unwrap().factors,
            vec![e(2, 0, 1, 5)]
        );
        let rot = factor_sl2(&z(&[&[0, 1], &[-1, 0]])).unwrap();
        assert_eq!(rot.factors, vec![e(2, 0, 1, 1), e(2, 1, 0, -1), e(2, 0, 1, 1)]);
        assert!(rot.verify());
    }

    #[test]
    fn diagonal_expansion_matches_multiplication() {
        for ring in [RingSpec::Integers, RingSpec::GaussianIntegers] {
            let units: Vec<RingElement> = match ring {
                RingSpec::Integers => vec![RingElement::int(-1)],
                _ => vec![
                    RingElement::gaussian(0, 1),
                    RingElement::gaussian(-1, 0),
                    RingElement::gaussian(0, -1),
                ],
            };
            for u in units {
                let factors = sl2_diagonal_factors(&u).unwrap();
                assert!(factors.len() <= 6);
                let prod = elementary::product(&ring, 2, &factors).unwrap();
                let expected = Matrix::diagonal(ring, &[u.clone(), u.unit_inverse().unwrap()]).unwrap();
                assert_eq!(prod, expected, "u = {u}");
            }
        }
        let u = RingElement::poly_fp(5, &[3]);
        let prod = elementary::product(&u.ring(), 2, &sl2_diagonal_factors(&u).unwrap()).unwrap();
        assert_eq!(prod.get(0, 0), &u);
        assert_eq!(prod.get(1, 1), &RingElement::poly_fp(5, &[2]));
    }

    #[test]
    fn identity_and_elementary_inputs() {
        let ring = RingSpec::Integers;
        assert!(factor_sln(&Matrix::identity(ring, 6)).unwrap().is_empty());
        for n in 2..=5 {
            for i in 0..n {
                for j in 0..n {
                    if i == j {
                        continue;
                    }
                    for v in [-3, -1, 1, 2, 7] {
                        let el = e(n, i, j, v);
                        let f = factor_sln(&el.to_matrix(&ring).unwrap()).unwrap();
                        assert_eq!(f.factors, vec![el]);
                    }
                }
            }
        }
    }

    #[test]
    fn errors() {
        assert_eq!(
            factor_sl2(&z(&[&[2, 0], &[0, 1]])),
            Err(FactorError::NotUnimodular { det: "2".into() })
        );
        assert!(matches!(factor_sln(&z(&[&[1]])), Err(FactorError::TooSmall { .. })));
        assert!(matches!(
            factor_sl2(&Matrix::identity(RingSpec::Integers, 3)),
            Err(FactorError::WrongShape { .. })
        ));
        assert!(matches!(
            cl_upper_bound(&z(&[&[1, 0], &[0, 1]])),
            Err(FactorError::TooSmall { .. })
        ));
    }

    #[test]
    fn cl_bounds() {
        let ring = RingSpec::Integers;
        assert_eq!(cl_upper_bound(&Matrix::identity(ring, 3)).unwrap(), 0);
        assert_eq!(cl_upper_bound(&e(3, 0, 2, 7).to_matrix(&ring).unwrap()).unwrap(), 1);
        let word = vec![e(3, 0, 1, 2), e(3, 1, 2, -3)];
        let m = elementary::product(&ring, 3, &word).unwrap();
        assert!(cl_upper_bound_with_word(&m, &word).unwrap() <= 2);
        assert_eq!(cl_upper_bound_with_word(&m, &word[..1]), Err(FactorError::WordMismatch));
    }
}
