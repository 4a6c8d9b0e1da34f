//! Averaging maps and reinterpretations: χ_ℬ, χ_𝒲, τ, χ_∧ and π.

use crate::error::Result;
use crate::expand::{require, require_plain, signed_average};
use diagram_core::{Flavor, FormalSum, Space};

/// χ_ℬ: symmetric diagrams to ordered ones, averaging over all leg orders.
pub fn chi_b(s: &FormalSum) -> Result<FormalSum> {
    require_plain("chi_B", s, &[Space::B])?;
    let mut out = FormalSum::zero(s.signature().to_space(Space::A));
    for (d, c) in s.sorted() {
        let all: Vec<usize> = (0..d.nlegs()).collect();
        signed_average(d, &all, c, &mut out);
    }
    Ok(out)
}

/// χ_𝒲: graded-commutative legs to ordered legs, signed average over leg orders.
pub fn chi_w(s: &FormalSum) -> Result<FormalSum> {
    require("chi_W", s, &[Space::W])?;
    let mut out = FormalSum::zero(s.signature().to_space(Space::WTilde));
    for (d, c) in s.sorted() {
        let all: Vec<usize> = (0..d.nlegs()).collect();
        signed_average(d, &all, c, &mut out);
    }
    Ok(out)
}

/// τ: forgets the leg order, 𝒲̃ to 𝒲.
pub fn tau(s: &FormalSum) -> Result<FormalSum> {
    require("tau", s, &[Space::WTilde])?;
    Ok(s.reinterpret(s.signature().to_space(Space::W)))
}

/// π: 𝒲̃ to Ŵ, generator by generator.
pub fn project_pi(s: &FormalSum) -> Result<FormalSum> {
    require("pi", s, &[Space::WTilde])?;
    Ok(s.reinterpret(s.signature().to_space(Space::WHat)))
}

/// χ_∧: Ŵ_∧ to Ŵ_F, signed average over permutations of the grade-1 legs
/// across the positions they occupy.
pub fn chi_wedge(s: &FormalSum) -> Result<FormalSum> {
    require("chi_wedge", s, &[Space::WWedge])?;
    let mut out = FormalSum::zero(s.signature().to_space(Space::WHatF));
    for (d, c) in s.sorted() {
        let g1: Vec<usize> = (0..d.nlegs()).filter(|&i| d.legs[i].flavor == Flavor::G1).collect();
        signed_average(d, &g1, c, &mut out);
    }
    Ok(out)
}
