//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on user input failed (bad parameter range, malformed
    /// boundary, perimeter mismatch, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A solver failed to converge or could not bracket an eigenvalue.
    #[error("solver failure: {0}")]
    Solver(String),

    /// A star-shapedness or mesh-quality check failed.
    #[error("mesh error: {0}")]
    Mesh(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn solver(msg: impl Into<String>) -> Self {
        Error::Solver(msg.into())
    }

    pub fn mesh(msg: impl Into<String>) -> Self {
        Error::Mesh(msg.into())
    }
}
