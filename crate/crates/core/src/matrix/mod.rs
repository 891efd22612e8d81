//! Dense matrices over any [`Ring`].
//!
//! The same container carries integer, polynomial, finite-field and
//! symbolic entries, so every identity can be checked over all of them by
//! one code path.

mod block;
mod det;
pub mod elementary;

use std::fmt;

use thiserror::Error;

pub use block::BlockView;
pub use det::{determinant_bareiss, determinant_cofactor};
pub use elementary::ElementaryMatrix;

use crate::error::AlgebraError;
use crate::ring::Ring;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("operands live over different coefficient rings")]
    DomainMismatch,
    #[error("entry ({row}, {col}) does not belong to the coefficient ring")]
    ForeignEntry { row: usize, col: usize },
    #[error("matrices must have at least one row and one column")]
    Empty,
    #[error("ragged rows")]
    Ragged,
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not unitriangular")]
    NotUnitriangular,
    #[error("matrix is not invertible over its ring")]
    NotInvertible,
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("size {size} is not a multiple of block size {block}")]
    BlockShape { size: usize, block: usize },
    #[error("elementary matrix needs distinct indices below {n}, got ({row}, {col})")]
    BadElementaryIndex { n: usize, row: usize, col: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Debug)]
pub struct Matrix<R: Ring> {
    ring: R,
    rows: usize,
    cols: usize,
    entries: Vec<R::Elem>,
}

impl<R: Ring> PartialEq for Matrix<R> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring
            && self.rows == other.rows
            && self.cols == other.cols
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(a, b)| self.ring.equal(a, b))
    }
}

impl<R: Ring> Matrix<R> {
    pub fn new(ring: R, rows: usize, cols: usize, entries: Vec<R::Elem>) -> Result<Self, MatrixError> {
        if rows == 0 || cols == 0 {
            return Err(MatrixError::Empty);
        }
        if entries.len() != rows * cols {
            return Err(MatrixError::Ragged);
        }
        if let Some(k) = entries.iter().position(|e| !ring.contains(e)) {
            return Err(MatrixError::ForeignEntry {
                row: k / cols,
                col: k % cols,
            });
        }
        Ok(Self {
            ring,
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(ring: R, rows: Vec<Vec<R::Elem>>) -> Result<Self, MatrixError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(MatrixError::Ragged);
        }
        Self::new(ring, nrows, ncols, rows.into_iter().flatten().collect())
    }

    pub fn from_i64_rows(ring: R, rows: &[&[i64]]) -> Result<Self, MatrixError> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| ring.from_i64(x)).collect())
            .collect();
        Self::from_rows(ring, rows)
    }

    pub fn zeros(ring: R, rows: usize, cols: usize) -> Self {
        let entries = vec![ring.zero(); rows * cols];
        Self {
            ring,
            rows,
            cols,
            entries,
        }
    }

    pub fn identity(ring: R, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.entries[i * n + i] = m.ring.one();
        }
        m
    }

    pub fn diagonal(ring: R, diag: &[R::Elem]) -> Result<Self, MatrixError> {
        let n = diag.len();
        if n == 0 {
            return Err(MatrixError::Empty);
        }
        let mut m = Self::zeros(ring, n, n);
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone())?;
        }
        Ok(m)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[R::Elem] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &R::Elem {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: R::Elem) -> Result<(), MatrixError> {
        if !self.ring.contains(&value) {
            return Err(MatrixError::ForeignEntry { row: i, col: j });
        }
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        self.entries[i * self.cols + j] = value;
        Ok(())
    }

    pub fn row(&self, i: usize) -> &[R::Elem] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    fn same_domain(&self, other: &Self) -> Result<(), MatrixError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(MatrixError::DomainMismatch)
        }
    }

    fn square_dim(&self) -> Result<usize, MatrixError> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, MatrixError> {
        self.same_domain(other)?;
        if self.cols != other.rows {
            return Err(MatrixError::DimensionMismatch {
                op: "mul",
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let r = &self.ring;
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = r.zero();
                for k in 0..self.cols {
                    let x = self.get(i, k);
                    let y = other.get(k, j);
                    if r.is_zero(x) || r.is_zero(y) {
                        continue;
                    }
                    acc = r.add(&acc, &r.mul(x, y)?);
                }
                entries.push(acc);
            }
        }
        Ok(Self {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: other.cols,
            entries,
        })
    }

    fn zip_with(
        &self,
        other: &Self,
        op: &'static str,
        f: impl Fn(&R, &R::Elem, &R::Elem) -> R::Elem,
    ) -> Result<Self, MatrixError> {
        self.same_domain(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(MatrixError::DimensionMismatch {
                op,
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| f(&self.ring, a, b))
            .collect();
        Ok(Self {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self, MatrixError> {
        self.zip_with(other, "add", |r, a, b| r.add(a, b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, MatrixError> {
        self.zip_with(other, "sub", |r, a, b| r.sub(a, b))
    }

    pub fn neg(&self) -> Self {
        Self {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| self.ring.neg(e)).collect(),
        }
    }

    pub fn scale(&self, k: &R::Elem) -> Result<Self, MatrixError> {
        let entries = self
            .entries
            .iter()
            .map(|e| self.ring.mul(k, e))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        Self {
            ring: self.ring.clone(),
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    /// `self^e` by repeated squaring.
    pub fn pow(&self, mut e: u64) -> Result<Self, MatrixError> {
        let n = self.square_dim()?;
        let mut acc = Self::identity(self.ring.clone(), n);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.ring.is_zero(e))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        self.ring.is_one(e)
                    } else {
                        self.ring.is_zero(e)
                    }
                })
            })
    }

    fn diagonal_is_one(&self) -> bool {
        (0..self.rows).all(|i| self.ring.is_one(self.get(i, i)))
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        self.is_square()
            && self.diagonal_is_one()
            && (0..self.rows).all(|i| (0..i).all(|j| self.ring.is_zero(self.get(i, j))))
    }

    pub fn is_lower_unitriangular(&self) -> bool {
        self.is_square()
            && self.diagonal_is_one()
            && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.ring.is_zero(self.get(i, j))))
    }

    /// Inverse of an upper or lower unitriangular matrix by back-substitution.
    /// The result has the same shape and no division is performed.
    pub fn unitriangular_inverse(&self) -> Result<Self, MatrixError> {
        if self.is_upper_unitriangular() {
            self.upper_unitriangular_inverse()
        } else if self.is_lower_unitriangular() {
            Ok(self.transpose().upper_unitriangular_inverse()?.transpose())
        } else {
            Err(MatrixError::NotUnitriangular)
        }
    }

    fn upper_unitriangular_inverse(&self) -> Result<Self, MatrixError> {
        let n = self.rows;
        let r = &self.ring;
        let mut inv = Self::identity(r.clone(), n);
        for j in 0..n {
            for i in (0..j).rev() {
                let mut acc = r.zero();
                for k in i + 1..=j {
                    let u = self.get(i, k);
                    if r.is_zero(u) {
                        continue;
                    }
                    acc = r.add(&acc, &r.mul(u, inv.get(k, j))?);
                }
                inv.entries[i * n + j] = r.neg(&acc);
            }
        }
        Ok(inv)
    }

    /// Exact determinant: fraction-free elimination over integral domains
    /// above 4x4, cofactor expansion otherwise.
    pub fn determinant(&self) -> Result<R::Elem, MatrixError> {
        let n = self.square_dim()?;
        if self.ring.is_integral_domain() && n > 4 {
            determinant_bareiss(self)
        } else {
            determinant_cofactor(self)
        }
    }

    /// Classical adjugate, so that `self * adj = det * I`.
    pub fn adjugate(&self) -> Result<Self, MatrixError> {
        let n = self.square_dim()?;
        let r = &self.ring;
        if n == 1 {
            return Ok(Self::identity(r.clone(), 1));
        }
        let mut adj = Self::zeros(r.clone(), n, n);
        for i in 0..n {
            for j in 0..n {
                let minor = self.minor(i, j);
                let d = determinant_cofactor(&minor)?;
                let d = if (i + j) % 2 == 0 { d } else { r.neg(&d) };
                adj.entries[j * n + i] = d;
            }
        }
        Ok(adj)
    }

    /// Copy with row `i` and column `j` removed.
    pub fn minor(&self, i: usize, j: usize) -> Self {
        let entries = (0..self.rows)
            .filter(|&a| a != i)
            .flat_map(|a| (0..self.cols).filter(move |&b| b != j).map(move |b| (a, b)))
            .map(|(a, b)| self.get(a, b).clone())
            .collect();
        Self {
            ring: self.ring.clone(),
            rows: self.rows - 1,
            cols: self.cols - 1,
            entries,
        }
    }

    /// Inverse when the determinant is a unit of the ring.
    pub fn inverse(&self) -> Result<Self, MatrixError> {
        let det = self.determinant()?;
        let det_inv = self.ring.unit_inverse(&det).ok_or(MatrixError::NotInvertible)?;
        self.adjugate()?.scale(&det_inv)
    }

    pub fn submatrix(&self, row: usize, col: usize, height: usize, width: usize) -> Self {
        assert!(row + height <= self.rows && col + width <= self.cols);
        let mut entries = Vec::with_capacity(height * width);
        for i in row..row + height {
            entries.extend_from_slice(&self.entries[i * self.cols + col..i * self.cols + col + width]);
        }
        Self {
            ring: self.ring.clone(),
            rows: height,
            cols: width,
            entries,
        }
    }

    pub fn set_submatrix(&mut self, row: usize, col: usize, sub: &Self) -> Result<(), MatrixError> {
        self.same_domain(sub)?;
        if row + sub.rows > self.rows || col + sub.cols > self.cols {
            return Err(MatrixError::DimensionMismatch {
                op: "set_submatrix",
                left: (self.rows, self.cols),
                right: (row + sub.rows, col + sub.cols),
            });
        }
        for i in 0..sub.rows {
            for j in 0..sub.cols {
                self.entries[(row + i) * self.cols + col + j] = sub.get(i, j).clone();
            }
        }
        Ok(())
    }

    /// Entrywise image under a map into another ring.
    pub fn map<S: Ring>(
        &self,
        target: &S,
        f: impl Fn(&R::Elem) -> Result<S::Elem, AlgebraError>,
    ) -> Result<Matrix<S>, MatrixError> {
        let entries = self.entries.iter().map(f).collect::<Result<Vec<_>, _>>()?;
        Matrix::new(target.clone(), self.rows, self.cols, entries)
    }

    /// Entries as strings, row by row.
    pub fn render_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|e| self.ring.render(e)).collect())
            .collect()
    }

    /// Conjugate by the block permutation matrix `P` sending block `J` to
    /// block `perm[J]`: returns `P * self * P^-1`.
    pub fn permutation_conjugate(&self, perm: &[usize], block: usize) -> Result<Self, MatrixError> {
        let n = self.square_dim()?;
        check_permutation(perm, n, block)?;
        let mut out = Self::zeros(self.ring.clone(), n, n);
        let target = |i: usize| perm[i / block] * block + i % block;
        for i in 0..n {
            for j in 0..n {
                out.entries[target(i) * n + target(j)] = self.get(i, j).clone();
            }
        }
        Ok(out)
    }

    /// Determinant-one variant of [`Matrix::permutation_conjugate`]: when the
    /// permutation matrix has determinant −1 its first column is negated.
    pub fn signed_permutation_conjugate(&self, perm: &[usize], block: usize) -> Result<Self, MatrixError> {
        let p = permutation_matrix(self.ring.clone(), perm, block, true)?;
        let p_inv = p.inverse()?;
        p.mul(self)?.mul(&p_inv)
    }
}

fn check_permutation(perm: &[usize], n: usize, block: usize) -> Result<(), MatrixError> {
    if block == 0 || !n.is_multiple_of(block) {
        return Err(MatrixError::BlockShape { size: n, block });
    }
    if perm.len() != n / block {
        return Err(MatrixError::InvalidPermutation(format!(
            "expected {} entries, got {}",
            n / block,
            perm.len()
        )));
    }
    let mut seen = vec![false; perm.len()];
    for &p in perm {
        if p >= perm.len() || std::mem::replace(&mut seen[p], true) {
            return Err(MatrixError::InvalidPermutation(format!("{perm:?}")));
        }
    }
    Ok(())
}

fn permutation_sign(perm: &[usize]) -> i64 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// Matrix of the block permutation `J -> perm[J]`. With `signed`, the first
/// column is negated whenever that makes the determinant one.
pub fn permutation_matrix<R: Ring>(
    ring: R,
    perm: &[usize],
    block: usize,
    signed: bool,
) -> Result<Matrix<R>, MatrixError> {
    let n = perm.len() * block;
    check_permutation(perm, n, block)?;
    let mut m = Matrix::zeros(ring.clone(), n, n);
    for j in 0..n {
        let i = perm[j / block] * block + j % block;
        m.entries[i * n + j] = ring.one();
    }
    // the scalar permutation has sign sign(perm)^block
    let odd = block % 2 == 1 && permutation_sign(perm) < 0;
    if signed && odd {
        let i = perm[0] * block;
        m.entries[i * n] = ring.neg(&ring.one());
    }
    Ok(m)
}

pub fn mat_mul<R: Ring>(a: &Matrix<R>, b: &Matrix<R>) -> Result<Matrix<R>, MatrixError> {
    a.mul(b)
}

pub fn mat_add<R: Ring>(a: &Matrix<R>, b: &Matrix<R>) -> Result<Matrix<R>, MatrixError> {
    a.add(b)
}

pub fn mat_neg<R: Ring>(a: &Matrix<R>) -> Matrix<R> {
    a.neg()
}

impl<R: Ring> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.render_rows();
        let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in rows {
            let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[{}]", cells.join("  "))?;
        }
        Ok(())
    }
}
