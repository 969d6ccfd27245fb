//! Crate-wide error type.
//!
//! Errors are split by how a command-line caller should react: bad input
//! (exit code 2), an enumeration that would exceed the configured cap
//! (exit code 3), and violated internal invariants (exit code 4).

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Invalid input: bad field parameters, reducible point polynomial,
    /// dimension mismatches, malformed flags.
    #[error("validation: {0}")]
    Validation(String),

    /// An enumeration would exceed the configured cap. The message carries
    /// the required count so the caller can decide whether to raise the cap.
    #[error("enumeration of {required} items exceeds the cap of {cap}")]
    ResourceCap { required: u128, cap: u128 },

    /// An internal invariant failed. Always a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    /// Process exit code for the CLI: 2 validation, 3 resource cap, 4 internal.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Validation(_) => 2,
            Error::ResourceCap { .. } => 3,
            Error::Internal(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
