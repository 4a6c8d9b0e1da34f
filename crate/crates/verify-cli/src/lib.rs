//! Library behind the `wheelforge` command: run configuration, check
//! records, the identity suites and the remaining subcommands.

pub mod commands;
pub mod config;
pub mod error;
pub mod report;
pub mod suites;

pub use commands::{
    apply_by_name, derive_omega, derive_omega_to, enumerate_text, load_sum, quotient_compare,
    resolve_operator,
};
pub use config::{resolve_max_weight, Format, VerifyConfig, DEFAULT_MAX_WEIGHT, ENV_MAX_WEIGHT};
pub use error::{CliError, Result};
pub use report::{render, Record, Status};
pub use suites::{criterion_name, literature_series, run_criterion, run_suite, Inputs, Suite};
