//! Crate-wide error type.

use thiserror::Error;

/// Errors produced anywhere in the pipeline.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input record; carries the 1-based line number.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// An input violated a precondition or invariant.
    #[error("validation error: {0}")]
    Validation(String),

    /// A requested key (day, patch, ...) does not exist.
    #[error("lookup error: {0}")]
    Lookup(String),

    /// A numeric computation failed (overflow, divergence).
    #[error("numeric error at iteration {iteration}: {msg}")]
    Numeric { iteration: usize, msg: String },

    /// Signalled by [`crate::vectorize::kernel`] when the lifetime diagram
    /// has no points; callers substitute the all-zero image.
    #[error("empty lifetime diagram")]
    EmptyDiagram,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    /// Process exit code for the CLI: 2 validation, 3 I/O, 4 numeric.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io(_) => 3,
            Error::Numeric { .. } => 4,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
