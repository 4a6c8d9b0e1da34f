//! Errors of the command-line front end.

use thiserror::Error;

/// Configuration, input and engine failures; all map to exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    /// Invalid flags or environment.
    #[error("configuration error: {0}")]
    Config(String),
    /// A file could not be read or written.
    #[error("{path}: {source}")]
    Io {
        /// The offending path.
        path: String,
        /// Underlying failure.
        source: std::io::Error,
    },
    /// Diagram parsing or algebra failure.
    #[error(transparent)]
    Diagram(#[from] diagram_core::DiagramError),
    /// Quotient failure, such as a sum outside the requested slice.
    #[error(transparent)]
    Rel(#[from] relations_engine::RelError),
    /// Operator failure.
    #[error(transparent)]
    Op(#[from] diff_operators::OpError),
    /// Map failure.
    #[error(transparent)]
    Map(#[from] complex_maps::MapError),
    /// Wheels failure.
    #[error(transparent)]
    Wheel(#[from] wheeling::WheelError),
}

/// Result alias for this crate.
pub type Result<T> = std::result::Result<T, CliError>;

/// Reads a file to a string.
pub fn read_file(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_string(),
        source,
    })
}

/// Writes a string to a file.
pub fn write_file(path: &str, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_string(),
        source,
    })
}
