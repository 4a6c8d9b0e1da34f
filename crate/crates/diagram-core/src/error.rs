//! Error type for diagram construction, parsing and algebra.

use thiserror::Error;

/// Errors raised by diagram-core.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    /// Structurally invalid generator.
    #[error("invalid diagram: {0}")]
    Invalid(String),
    /// Operands live in different signatures.
    #[error("signature mismatch: {0} vs {1}")]
    SignatureMismatch(String, String),
    /// Operation not defined in the signature.
    #[error("operation {op} not defined in signature {sig}")]
    Unsupported {
        /// Operation name.
        op: &'static str,
        /// Signature name.
        sig: String,
    },
    /// Syntax error in the text format.
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax {
        /// 1-based line.
        line: usize,
        /// 1-based column.
        col: usize,
        /// Description.
        msg: String,
    },
    /// Well-formed text violating a diagram invariant.
    #[error("semantic error: {0}")]
    Semantic(String),
}

/// Result alias.
pub type Result<T> = std::result::Result<T, DiagramError>;
