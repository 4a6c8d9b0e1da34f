//! Wheels and wheeling: the operation ∂ of one symmetric diagram on another,
//! the truncated Wheels element Ω, the composite lemma that determines its
//! coefficients, and the multiplicativity checks built on the two-line
//! homotopy.

pub mod checks;
pub mod error;
pub mod lemma;
pub mod operate;
pub mod series;

pub use checks::{check_hw, check_wheeling, HwReport, WheelingOptions, WheelingReport};
pub use error::{Result, WheelError};
pub use lemma::{
    check_composite_lemma, composite, derive_wheels_coefficients, pull_back, transport, vanishes,
    wheeled_average, CompositeReport, Pulled,
};
pub use operate::{glue_pairs, operate, operate_raw};
pub use series::{
    default_coefficients, format_coefficients, max_legs, parse_coefficients, partial_omega,
    partial_omega_with, wheel, wheels_series, wheels_series_with, Coefficients, WheelsSeries, GOLDEN,
    MAX_ORDER,
};
