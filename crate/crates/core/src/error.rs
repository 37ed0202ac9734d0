use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed integer list `{0}`")]
    Parse(String),
    #[error("entries must be weakly decreasing: {0}")]
    NotDecreasing(String),
    #[error("partition parts must be nonnegative: {0}")]
    NegativePart(String),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("{inner} is not contained in {outer}")]
    NotContained { inner: String, outer: String },
    #[error("invalid setup: {0}")]
    InvalidSetup(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("rank check failed: {0}")]
    RankMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
