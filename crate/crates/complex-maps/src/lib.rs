//! Named maps between diagram spaces.
//!
//! Averaging maps ([`chi_b`], [`chi_w`], [`chi_wedge`]), relabelings and the
//! curvature basis change ([`phi_b`], [`basis_f_to_dot`], [`basis_dot_to_f`],
//! [`upsilon`], [`phi_a`]), the two-line machinery ([`theta`],
//! [`omega_collapse`], [`eval_disc`], [`integrate_discs`], [`homotopy_st`],
//! [`homotopy_s`]) and the pairing map [`lambda`]. Every map is linear and
//! acts generator by generator.

pub mod averaging;
pub mod basis;
pub mod error;
pub mod expand;
pub mod pairing;
pub mod registry;
pub mod two_line;

pub use averaging::{chi_b, chi_w, chi_wedge, project_pi, tau};
pub use basis::{basis_dot_to_f, basis_f_to_dot, f_expansion_raw, hat_iota, phi_a, phi_a_inverse, phi_b, upsilon};
pub use error::{MapError, Result};
pub use expand::{expand_legs, factorial, koszul_sign, signed_average, substitute, LegRule};
pub use pairing::{
    hat_equal, hat_is_zero, lambda, pairing_action, pairing_action_raw, pairings, to_wedge, Pairing,
};
pub use registry::{apply_map, MAP_NAMES};
pub use two_line::{
    beta, eval_disc, homotopy_s, homotopy_st, homotopy_st_literal, inject_line, integrate_discs, omega_collapse,
    theta, theta_raw, theta_rule, with_filled_disc_at, Endpoint, Side,
};
