//! Crate-wide error type.

use std::path::PathBuf;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// Malformed text input (CSV row, MHA header line, HMAP header).
    #[error("{path}, line {line}: {msg}")]
    Parse {
        path: PathBuf,
        line: usize,
        msg: String,
    },

    /// Recognized file but a feature outside the supported subset.
    #[error("unsupported format: {0}")]
    Unsupported(String),

    /// Declared extents or counts disagree with the actual payload.
    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    /// Caller violated an operation precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Cross-file or cross-structure inconsistency (duplicate ids,
    /// missing predictions, mismatched landmark counts).
    #[error("inconsistent data: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn parse(path: impl Into<PathBuf>, line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            line,
            msg: msg.into(),
        }
    }
}
