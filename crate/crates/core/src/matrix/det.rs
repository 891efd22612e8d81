use std::collections::HashMap;

use super::{Matrix, MatrixError};
use crate::ring::Ring;

/// Laplace expansion along rows, memoised on the set of unused columns.
/// Division-free, so valid over any commutative ring.
pub fn determinant_cofactor<R: Ring>(m: &Matrix<R>) -> Result<R::Elem, MatrixError> {
    let n = m.square_dim()?;
    assert!(n < 64, "cofactor expansion limited to n < 64");
    let ring = m.ring();
    let mut memo: HashMap<u64, R::Elem> = HashMap::new();
    let full: u64 = (1u64 << n) - 1;
    expand(m, ring, full, n, &mut memo)
}

fn expand<R: Ring>(
    m: &Matrix<R>,
    ring: &R,
    cols: u64,
    n: usize,
    memo: &mut HashMap<u64, R::Elem>,
) -> Result<R::Elem, MatrixError> {
    if cols == 0 {
        return Ok(ring.one());
    }
    if let Some(v) = memo.get(&cols) {
        return Ok(v.clone());
    }
    let row = n - cols.count_ones() as usize;
    let mut acc = ring.zero();
    let mut position = 0;
    for j in 0..n {
        if cols & (1 << j) == 0 {
            continue;
        }
        let e = m.get(row, j);
        if !ring.is_zero(e) {
            let sub = expand(m, ring, cols & !(1 << j), n, memo)?;
            let term = ring.mul(e, &sub)?;
            acc = if position % 2 == 0 {
                ring.add(&acc, &term)
            } else {
                ring.sub(&acc, &term)
            };
        }
        position += 1;
    }
    memo.insert(cols, acc.clone());
    Ok(acc)
}

/// Fraction-free Gaussian elimination. Every division is exact in an
/// integral domain; rings without [`Ring::exact_quotient`] are rejected.
pub fn determinant_bareiss<R: Ring>(m: &Matrix<R>) -> Result<R::Elem, MatrixError> {
    let n = m.square_dim()?;
    let ring = m.ring();
    if !ring.is_integral_domain() {
        return determinant_cofactor(m);
    }
    let mut a: Vec<Vec<R::Elem>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut negate = false;
    let mut prev = ring.one();
    for k in 0..n.saturating_sub(1) {
        if ring.is_zero(&a[k][k]) {
            match (k + 1..n).find(|&i| !ring.is_zero(&a[i][k])) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return Ok(ring.zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = ring.sub(&ring.mul(&a[i][j], &a[k][k])?, &ring.mul(&a[i][k], &a[k][j])?);
                a[i][j] = ring
                    .exact_quotient(&num, &prev)
                    .expect("Bareiss division is exact in an integral domain");
            }
            a[i][k] = ring.zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { ring.neg(&det) } else { det })
}
