use thiserror::Error;

use crate::ring::Ring;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(Ring, Ring),

    #[error("zero vector where a nonzero vector is required")]
    ZeroVector,

    #[error("basis is singular")]
    Singular,

    #[error("basis is degenerate: {0}")]
    Degenerate(String),

    #[error("reduction exceeded {0} outer iterations")]
    MaxSweepsExceeded(usize),

    #[error("operation not supported for the {0} ring")]
    UnsupportedRing(Ring),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("generation failed: {0}")]
    Generation(String),
}
