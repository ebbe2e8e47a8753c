use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::roots::Family;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("matrix is not positive definite (leading principal minor {index} is not positive)")]
    NotPositiveDefinite { index: usize },
    #[error("no {family} lattice of dimension {n}")]
    InvalidLattice { family: Family, n: usize },
    #[error("coset label entries must be 0 or 1")]
    InvalidLabel,
    #[error("the trivial coset 2L has no role in the norm-equality system")]
    ZeroCoset,
    #[error("cone is not pointed: it contains the line spanned by {witness:?}")]
    NotPointed { witness: Vec<BigInt> },
    #[error("ray {index} lies outside the cone")]
    RayOutsideCone { index: usize },
    #[error("gamma entry {index} is not positive")]
    NonPositiveGamma { index: usize },
    #[error("gamma entry {index} is negative")]
    NegativeGamma { index: usize },
    #[error("unsupported dimension n = {n}: {reason}")]
    UnsupportedDimension { n: usize, reason: &'static str },
    #[error("gamma lies on or outside the boundary of G_n")]
    GammaNotInterior,
    #[error("gamma is interior to G_n, no vertices are glued")]
    GammaInterior,
    #[error("gamma lies outside the closure of G_n")]
    GammaOutsideClosure,
}
