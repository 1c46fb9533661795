use thiserror::Error;

use crate::ArtinClass;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shift must be nonnegative, got {0}")]
    NegativeShift(i64),
    #[error("multiplicity must be nonnegative, got {0}")]
    NegativeMultiplicity(i64),
    #[error("p must be an odd prime, got {0}")]
    InvalidPrime(u64),
    #[error("n must be at least 1, got {0}")]
    InvalidExponent(u32),
    #[error("p^n overflows: p = {p}, n = {n}")]
    DegreeOverflow { p: u64, n: u32 },
    #[error("degree must be odd, got {0}")]
    EvenDegree(u64),
    #[error("degree must be at least {min}, got {degree}")]
    DegreeTooSmall { degree: u64, min: u64 },
    #[error("index {index} out of range 1..={max} for degree {degree}")]
    IndexOutOfRange { degree: u64, index: u64, max: u64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid tile {name:?}: {reason}")]
    InvalidTile { name: String, reason: String },
    #[error("stuck at shift {shift}: {detail}")]
    Stuck {
        shift: u64,
        class: ArtinClass,
        detail: String,
    },
    #[error("greedy peeling is not deterministic for these tiles: {0}")]
    Nondeterministic(String),
    #[error("target rank {rank} exceeds the configured bound {bound}")]
    RankBoundExceeded { rank: String, bound: u64 },
    #[error("degree {degree} exceeds the configured bound {bound}")]
    DegreeBoundExceeded { degree: u64, bound: u64 },
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

impl Error {
    /// True for errors raised by a configured size bound rather than bad input.
    pub fn is_bound(&self) -> bool {
        matches!(
            self,
            Error::RankBoundExceeded { .. } | Error::DegreeBoundExceeded { .. }
        )
    }
}
