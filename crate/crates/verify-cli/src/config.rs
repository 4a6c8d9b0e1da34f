//! Run configuration and the weight bound.

use crate::error::{CliError, Result};

/// Environment variable overriding the default weight bound.
pub const ENV_MAX_WEIGHT: &str = "WHEELFORGE_MAX_WEIGHT";

/// Weight bound used when neither the flag nor the environment sets one.
pub const DEFAULT_MAX_WEIGHT: usize = 6;

/// Output style of verification reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    /// One human-readable line per check.
    #[default]
    Text,
    /// One JSON object per check.
    Machine,
}

/// Settings shared by every suite.
#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    /// Largest diagram weight enumerated by slice-wide checks.
    pub max_weight: usize,
    /// Worker threads used inside a check.
    pub threads: usize,
    /// Report style.
    pub format: Format,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_weight: DEFAULT_MAX_WEIGHT,
            threads: 1,
            format: Format::Text,
        }
    }
}

fn parse_weight(text: &str, origin: &str) -> Result<usize> {
    let v: i64 = text
        .trim()
        .parse()
        .map_err(|_| CliError::Config(format!("{origin}: `{text}` is not an integer")))?;
    usize::try_from(v).map_err(|_| CliError::Config(format!("{origin}: max weight must be at least 0, got {v}")))
}

/// Resolves the weight bound: flag, then environment, then the default.
pub fn resolve_max_weight(flag: Option<&str>) -> Result<usize> {
    if let Some(f) = flag {
        return parse_weight(f, "--max-weight");
    }
    match std::env::var(ENV_MAX_WEIGHT) {
        Ok(v) => parse_weight(&v, ENV_MAX_WEIGHT),
        Err(_) => Ok(DEFAULT_MAX_WEIGHT),
    }
}
