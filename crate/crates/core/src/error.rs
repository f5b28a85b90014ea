//! Error type shared across the crate.

use thiserror::Error;

/// Domain errors surfaced by fallible operations.
///
/// Structural contract violations (mixed ranks, out-of-range generator
/// indices in direct constructors) panic instead; see the individual
/// constructors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("operation requires an element of the commutator ideal (zero linear part)")]
    NonzeroLinearPart,

    #[error("element is not supported on the square generators [xi,xi] alone")]
    NotDiagonal,

    #[error("element is not supported on the mixed generators [xi,xj], i != j, alone")]
    NotOffDiagonal,

    #[error("element is not symmetric: {reason}")]
    NotSymmetric { reason: String },

    #[error("f is not fixed by the stabilizer of index 1")]
    FNotInvariant,

    #[error("g is not fixed by the stabilizer of indices 1 and 2")]
    GNotInvariant,

    #[error("rank 1 admits no off-diagonal part; g must be zero")]
    GNotZeroAtRankOne,

    #[error("rank {rank} exceeds the full-orbit enumeration bound {bound}")]
    OrbitBoundExceeded { rank: usize, bound: usize },

    #[error("homogeneous component dimension {dim} exceeds the cost bound {bound}")]
    CostBoundExceeded { dim: usize, bound: usize },

    #[error("no annihilator + symmetric splitting exists for this element")]
    NotPreserving,

    #[error("invalid {field}: {detail}")]
    InvalidData { field: String, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
