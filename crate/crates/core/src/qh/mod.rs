//! Finite and abelian test beds for quasi-homomorphisms: defect,
//! homogenization by doubling, exact commutator length by breadth-first
//! search, stable commutator length estimates and conjugate-to-inverse
//! search.

mod cl;
mod group;
mod map;

use thiserror::Error;

pub use cl::{
    cl_exact, is_conjugate_to_inverse, scl_estimate, witness_product, ClRecord, CommutatorLengths, SclEstimate,
};
pub use group::{FiniteGroup, FreeAbelian, Group, GroupSpec, Sl2Fp, Symmetric, TableGroup};
pub use map::{
    commuting_additivity_check, defect_estimate, defect_exhaustive, floor_times_sqrt2, homogenization_error_bound,
    homogenize, AdditivityReport, HomogenizedMap, RealValuedMap, MAX_DOUBLINGS,
};

/// Default bound on the number of elements a finite group may have before
/// enumeration is refused.
pub const DEFAULT_CAP: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QhError {
    #[error("no sample pairs supplied")]
    EmptySample,
    #[error("k must be at least 1")]
    KTooSmall,
    #[error("2^{k} is beyond the doubling guard 2^{max}")]
    PowerGuard { k: u32, max: u32 },
    #[error("group of order {size} exceeds the enumeration cap {cap}")]
    CapExceeded { size: u128, cap: u128 },
    #[error("{0} is not in the commutator subgroup")]
    NotInCommutatorSubgroup(String),
    #[error("no power g^n with 1 <= n <= {n_max} lies in the commutator subgroup")]
    NoQualifyingPower { n_max: u64 },
    #[error("{0} and {1} do not commute")]
    NonCommutingPair(String, String),
    #[error("bad group spec {0}")]
    BadGroupSpec(String),
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("parse error: {0}")]
    Parse(String),
}
