//! Errors raised when building or applying operators.

use diagram_core::DiagramError;
use thiserror::Error;

/// Error type of the operator layer.
#[derive(Debug, Error)]
pub enum OpError {
    /// A leg kind without a substitution rule was encountered.
    #[error("operator {op} has no rule for leg {leg}")]
    MissingRule {
        /// Operator name.
        op: String,
        /// Leg token.
        leg: String,
    },
    /// Operator not defined on the signature.
    #[error("operator {op} is not defined on {sig}")]
    Unsupported {
        /// Operator name.
        op: String,
        /// Signature name.
        sig: String,
    },
    /// The contracting homotopy met a term without legs.
    #[error("s is undefined on a term with no legs")]
    ZeroLegs,
    /// Underlying diagram error.
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// Result alias for the operator layer.
pub type Result<T> = std::result::Result<T, OpError>;
