use super::{Matrix, MatrixError};
use crate::ring::Ring;

/// A `(k*b) x (k*b)` matrix seen as a `k x k` matrix of `b x b` blocks,
/// e.g. `M_6(A)` as `M_3(M_2(A))`.
#[derive(Clone, Debug, PartialEq)]
pub struct BlockView<R: Ring> {
    block: usize,
    k: usize,
    blocks: Vec<Matrix<R>>,
}

impl<R: Ring> BlockView<R> {
    pub fn from_matrix(m: &Matrix<R>, block: usize) -> Result<Self, MatrixError> {
        let n = m.square_dim()?;
        if block == 0 || n % block != 0 {
            return Err(MatrixError::BlockShape { size: n, block });
        }
        let k = n / block;
        let blocks = (0..k * k)
            .map(|t| m.submatrix((t / k) * block, (t % k) * block, block, block))
            .collect();
        Ok(Self { block, k, blocks })
    }

    /// Assemble from `k*k` blocks listed row by row.
    pub fn from_blocks(block: usize, k: usize, blocks: Vec<Matrix<R>>) -> Result<Self, MatrixError> {
        if blocks.len() != k * k || k == 0 {
            return Err(MatrixError::Ragged);
        }
        if blocks.iter().any(|b| b.rows() != block || b.cols() != block) {
            return Err(MatrixError::BlockShape { size: k * block, block });
        }
        let ring = blocks[0].ring().clone();
        if blocks.iter().any(|b| *b.ring() != ring) {
            return Err(MatrixError::DomainMismatch);
        }
        Ok(Self { block, k, blocks })
    }

    pub fn block_size(&self) -> usize {
        self.block
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    /// Block `(i, j)`, zero-based.
    pub fn block(&self, i: usize, j: usize) -> &Matrix<R> {
        &self.blocks[i * self.k + j]
    }

    pub fn to_matrix(&self) -> Matrix<R> {
        let n = self.k * self.block;
        let mut m = Matrix::zeros(self.blocks[0].ring().clone(), n, n);
        for (t, b) in self.blocks.iter().enumerate() {
            m.set_submatrix((t / self.k) * self.block, (t % self.k) * self.block, b)
                .expect("block fits");
        }
        m
    }
}

impl<R: Ring> Matrix<R> {
    /// Assemble a square block matrix from rows of equally sized square blocks.
    pub fn from_blocks(rows: Vec<Vec<Matrix<R>>>) -> Result<Self, MatrixError> {
        let k = rows.len();
        if rows.iter().any(|r| r.len() != k) {
            return Err(MatrixError::Ragged);
        }
        let block = rows.first().and_then(|r| r.first()).map_or(0, |b| b.rows());
        Ok(BlockView::from_blocks(block, k, rows.into_iter().flatten().collect())?.to_matrix())
    }

    /// Block `(i, j)` of size `block`, zero-based.
    pub fn block(&self, i: usize, j: usize, block: usize) -> Self {
        self.submatrix(i * block, j * block, block, block)
    }
}
