//! Map lookup by name.

use crate::averaging::{chi_b, chi_w, chi_wedge, project_pi, tau};
use crate::basis::{basis_dot_to_f, basis_f_to_dot, hat_iota, phi_a, phi_b, upsilon};
use crate::error::{MapError, Result};
use crate::pairing::lambda;
use crate::two_line::{
    eval_disc, homotopy_s, homotopy_st, inject_line, integrate_discs, omega_collapse, theta, Endpoint, Side,
};
use diagram_core::FormalSum;

/// Names accepted by [`apply_map`].
pub const MAP_NAMES: [&str; 21] = [
    "chi_B", "chi_W", "tau", "phi_B", "BFdot", "BdotF", "upsilon", "i_n", "i_c", "theta", "omega", "ev0", "ev1",
    "int", "sT", "s", "pi", "lambda", "chi_wedge", "hat_iota", "phi_A",
];

/// Applies a named map.
pub fn apply_map(name: &str, s: &FormalSum) -> Result<FormalSum> {
    match name {
        "chi_B" => chi_b(s),
        "chi_W" => chi_w(s),
        "tau" => tau(s),
        "phi_B" => phi_b(s),
        "BFdot" => basis_f_to_dot(s),
        "BdotF" => basis_dot_to_f(s),
        "upsilon" => upsilon(s),
        "i_n" => inject_line(Side::Nc, s),
        "i_c" => inject_line(Side::C, s),
        "theta" => theta(s),
        "omega" => omega_collapse(s),
        "ev0" => eval_disc(Endpoint::Zero, s),
        "ev1" => eval_disc(Endpoint::One, s),
        "int" => integrate_discs(s),
        "sT" => homotopy_st(s),
        "s" => homotopy_s(s),
        "pi" => project_pi(s),
        "lambda" => lambda(s),
        "chi_wedge" => chi_wedge(s),
        "hat_iota" => hat_iota(s),
        "phi_A" => phi_a(s),
        _ => Err(MapError::UnknownMap(name.to_string())),
    }
}
