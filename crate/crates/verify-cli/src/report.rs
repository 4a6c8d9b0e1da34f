//! Check records and their rendering.

use crate::config::Format;
use serde::Serialize;
use std::fmt;

/// Outcome of one check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    /// Every instance held.
    Pass,
    /// Some instance failed or could not be decided.
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

/// One identity checked over one slice.
#[derive(Clone, Debug, Serialize)]
pub struct Record {
    /// Suite name.
    pub suite: String,
    /// The identity checked.
    pub identity: String,
    /// Where it was checked.
    pub slice: String,
    /// Outcome.
    pub status: Status,
    /// Number of instances checked.
    pub instances: usize,
    /// The first failing instance with both sides, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Record {
    /// Whether the check passed.
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Renders one record.
pub fn render(r: &Record, format: Format) -> String {
    match format {
        Format::Machine => serde_json::to_string(r).expect("records serialize"),
        Format::Text => {
            let mut s = format!(
                "[{}] {}: {} on {} ({} instances)",
                r.status, r.suite, r.identity, r.slice, r.instances
            );
            if let Some(d) = &r.detail {
                for line in d.lines() {
                    s.push_str("\n    ");
                    s.push_str(line);
                }
            }
            s
        }
    }
}
