//! Errors raised by the maps between diagram spaces.

use diagram_core::DiagramError;
use diff_operators::OpError;
use relations_engine::RelError;
use thiserror::Error;

/// Error type of the map layer.
#[derive(Debug, Error)]
pub enum MapError {
    /// The input sum lives in a signature the map does not accept.
    #[error("map {map} is not defined on {sig}")]
    Domain {
        /// Map name.
        map: String,
        /// Signature name.
        sig: String,
    },
    /// A pairing references a leg that is missing or not of grade 1, or reuses a leg.
    #[error("invalid pairing: {0}")]
    Pairing(String),
    /// The inverse of φ_𝒜 met a term with grade-1 legs.
    #[error("term has {0} grade-1 legs; the inverse of phi_A needs none")]
    NotInZeroSummand(usize),
    /// Unknown map name.
    #[error("unknown map {0}")]
    UnknownMap(String),
    /// Underlying diagram error.
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    /// Underlying operator error.
    #[error(transparent)]
    Op(#[from] OpError),
    /// Underlying relation error.
    #[error(transparent)]
    Rel(#[from] RelError),
}

/// Result alias for the map layer.
pub type Result<T> = std::result::Result<T, MapError>;
