//! Crate-wide error type.

use crate::qseries::SeriesError;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("invalid partition: {0}")]
    Partition(String),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("energy cap: {0}")]
    EnergyCap(String),
    #[error("unstable range: {0}")]
    Unstable(String),
    #[error("limit exceeded: {0}")]
    Limit(String),
    #[error("cache: {0}")]
    Cache(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
