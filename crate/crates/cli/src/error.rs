use std::path::PathBuf;

use thiserror::Error;

/// Failures that are the caller's fault. All of them exit with status 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] cayley_core::Error),
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("malformed point list: {0}")]
    PointList(#[from] serde_json::Error),
    #[error("{0}")]
    Usage(String),
}
