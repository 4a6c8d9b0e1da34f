//! Errors raised by the wheeling layer.

use complex_maps::MapError;
use diagram_core::DiagramError;
use diff_operators::OpError;
use relations_engine::RelError;
use thiserror::Error;

/// Error type of the wheeling layer.
#[derive(Debug, Error)]
pub enum WheelError {
    /// Requested truncation order above the configured cap.
    #[error("order {order} exceeds the cap {cap}")]
    OrderTooLarge {
        /// Requested order.
        order: usize,
        /// Cap.
        cap: usize,
    },
    /// The linear system for a wheel coefficient has no unique solution.
    #[error("singular system for b{order}: {detail}")]
    Singular {
        /// Wheel order.
        order: usize,
        /// Diagnostics.
        detail: String,
    },
    /// A coefficient is missing from the supplied table.
    #[error("no coefficient for the {0}-legged wheel")]
    MissingCoefficient(usize),
    /// Malformed coefficient file.
    #[error("coefficient file line {line}: {detail}")]
    Golden {
        /// 1-based line number.
        line: usize,
        /// What went wrong.
        detail: String,
    },
    /// Underlying diagram error.
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    /// Underlying operator error.
    #[error(transparent)]
    Op(#[from] OpError),
    /// Underlying relation error.
    #[error(transparent)]
    Rel(#[from] RelError),
    /// Underlying map error.
    #[error(transparent)]
    Map(#[from] MapError),
}

/// Result alias for the wheeling layer.
pub type Result<T> = std::result::Result<T, WheelError>;
