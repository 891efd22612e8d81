//! Versioned JSON file formats and atomic output.

use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::AlgebraError;
use crate::factor::{DVDecomposition, FactorizationResult};
use crate::matrix::{Matrix, MatrixError};
use crate::ring::{Ring, RingSpec};

pub const MATRIX_FORMAT: &str = "quasilin-matrix/1";
pub const FACTORIZATION_FORMAT: &str = "quasilin-factorization/1";
pub const DV_INPUT_FORMAT: &str = "quasilin-dv-input/1";
pub const DV_FORMAT: &str = "quasilin-dv/1";

#[derive(Debug, Error)]
pub enum IoError {
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: std::io::Error },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported format `{found}`, expected `{expected}`")]
    Format { found: String, expected: &'static str },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// A matrix with its ring; entries are element strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub format: String,
    pub ring: String,
    pub rows: Vec<Vec<String>>,
}

impl MatrixFile {
    pub fn from_matrix(m: &Matrix<RingSpec>) -> Self {
        Self {
            format: MATRIX_FORMAT.into(),
            ring: m.ring().to_string(),
            rows: m.render_rows(),
        }
    }

    pub fn to_matrix(&self) -> Result<Matrix<RingSpec>, IoError> {
        check_format(&self.format, MATRIX_FORMAT)?;
        let ring: RingSpec = self.ring.parse()?;
        parse_rows(&ring, &self.rows)
    }
}

fn check_format(found: &str, expected: &'static str) -> Result<(), IoError> {
    if found == expected {
        Ok(())
    } else {
        Err(IoError::Format {
            found: found.into(),
            expected,
        })
    }
}

pub fn parse_rows(ring: &RingSpec, rows: &[Vec<String>]) -> Result<Matrix<RingSpec>, IoError> {
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(|s| ring.parse_element(s)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows(*ring, parsed)?)
}

/// One elementary factor `E_ij(value)`, 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorRecord {
    pub i: usize,
    pub j: usize,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationFile {
    pub format: String,
    pub ring: String,
    pub n: usize,
    pub input: Vec<Vec<String>>,
    pub count: usize,
    pub product_check: bool,
    pub factors: Vec<FactorRecord>,
}

impl FactorizationFile {
    pub fn new(result: &FactorizationResult) -> Self {
        Self {
            format: FACTORIZATION_FORMAT.into(),
            ring: result.ring.to_string(),
            n: result.input.rows(),
            input: result.input.render_rows(),
            count: result.len(),
            product_check: result.verify(),
            factors: result
                .factors
                .iter()
                .map(|e| FactorRecord {
                    i: e.row + 1,
                    j: e.col + 1,
                    value: result.ring.render(&e.value),
                })
                .collect(),
        }
    }
}

/// `p`, `q` and optionally `r`; a missing `r` means `(pq)^-1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DvInputFile {
    pub format: String,
    pub ring: String,
    pub p: Vec<Vec<String>>,
    pub q: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<Vec<Vec<String>>>,
}

/// Ring, `p`, `q` and the optional `r` of a DV input file.
pub type DvBlocks = (RingSpec, Matrix<RingSpec>, Matrix<RingSpec>, Option<Matrix<RingSpec>>);

impl DvInputFile {
    pub fn matrices(&self) -> Result<DvBlocks, IoError> {
        check_format(&self.format, DV_INPUT_FORMAT)?;
        let ring: RingSpec = self.ring.parse()?;
        let p = parse_rows(&ring, &self.p)?;
        let q = parse_rows(&ring, &self.q)?;
        let r = self.r.as_ref().map(|r| parse_rows(&ring, r)).transpose()?;
        Ok((ring, p, q, r))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DvFile {
    pub format: String,
    pub ring: String,
    pub p: Vec<Vec<String>>,
    pub q: Vec<Vec<String>>,
    pub r: Vec<Vec<String>>,
    pub l1: Vec<Vec<String>>,
    pub u1: Vec<Vec<String>>,
    pub l2: Vec<Vec<String>>,
    pub u2: Vec<Vec<String>>,
    pub shapes_ok: bool,
    pub product_check: bool,
}

impl DvFile {
    pub fn new(d: &DVDecomposition<RingSpec>) -> Self {
        let (p, q, r) = &d.diag_input;
        Self {
            format: DV_FORMAT.into(),
            ring: p.ring().to_string(),
            p: p.render_rows(),
            q: q.render_rows(),
            r: r.render_rows(),
            l1: d.l1.render_rows(),
            u1: d.u1.render_rows(),
            l2: d.l2.render_rows(),
            u2: d.u2.render_rows(),
            shapes_ok: d.shapes_hold(),
            product_check: d.verify(),
        }
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, IoError> {
    let text = std::fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.display().to_string(),
        source,
    })?;
    Ok(serde_json::from_str(&text)?)
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

/// Write to a temporary file beside `path`, then rename over it.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), IoError> {
    let err = |source| IoError::Write {
        path: path.display().to_string(),
        source,
    };
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    std::fs::create_dir_all(dir).map_err(err)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(err)?;
    tmp.write_all(contents.as_bytes()).map_err(err)?;
    tmp.persist(path).map_err(|e| err(e.error))?;
    Ok(())
}
