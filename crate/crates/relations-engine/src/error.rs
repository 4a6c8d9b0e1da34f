//! Errors raised by enumeration and quotient decisions.

use diagram_core::DiagramError;
use thiserror::Error;

/// Error type of the relations engine.
#[derive(Debug, Error)]
pub enum RelError {
    /// Malformed request.
    #[error("invalid request: {0}")]
    Invalid(String),
    /// Enumeration or closure exceeded its configured cap.
    #[error("resource limit: {0}")]
    TooLarge(String),
    /// A sum has support outside the requested slice.
    #[error("support outside slice: {0}")]
    OutsideSlice(String),
    /// Operation not available in the signature.
    #[error("unsupported in {sig}: {op}")]
    Unsupported {
        /// Operation name.
        op: &'static str,
        /// Signature name.
        sig: String,
    },
    /// Underlying diagram error.
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// Result alias for the relations engine.
pub type Result<T> = std::result::Result<T, RelError>;
