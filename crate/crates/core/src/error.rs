use std::time::Duration;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("permutation groups need at least 2 points, got {0}")]
    DegreeTooSmall(usize),

    #[error("group too large: more than {cap} elements")]
    GroupTooLarge { cap: u64 },

    #[error("too many points: {points} exceeds the cap of {cap}")]
    PointCapExceeded { points: u128, cap: usize },

    #[error("structure on {n} vertices exceeds the cap of {cap}")]
    StructureTooLarge { n: usize, cap: usize },

    #[error("search timed out after {0:?}")]
    Timeout(Duration),

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("search space too large: {0}")]
    SearchTooLarge(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
