//! Relabelings and the curvature basis change: φ_ℬ, B_{F→•}, B_{•→F}, Υ,
//! φ_𝒜 and ι̂.

use crate::error::{MapError, Result};
use crate::expand::{expand_legs, require, require_plain, substitute};
use diagram_core::{q, qi, Coeff, Diagram, Flavor, FormalSum, Fragment, Leg, Line, Space};
use diff_operators::fork;

/// φ_ℬ: every leg becomes an F-leg, ℬ to 𝒲_F.
pub fn phi_b(s: &FormalSum) -> Result<FormalSum> {
    require_plain("phi_B", s, &[Space::B])?;
    let out = s.signature().to_space(Space::WF);
    Ok(s.map_terms(out, |d, c, acc| {
        acc.add_raw(&d.map_flavors(|_| Flavor::F), c)
    }))
}

fn expansion(sign_of_fork: i64) -> Vec<(Coeff, Fragment)> {
    vec![(qi(1), Fragment::leg(Leg::FAT)), (q(sign_of_fork, 2), fork())]
}

/// B_{F→•}: expands F = fat − ½·fork, 𝒲_F to 𝒲 and Ŵ_F to Ŵ.
pub fn basis_f_to_dot(s: &FormalSum) -> Result<FormalSum> {
    require("BFdot", s, &[Space::WF, Space::WHatF])?;
    let space = if s.signature().space == Space::WF { Space::W } else { Space::WHat };
    let terms = expansion(-1);
    substitute(s, s.signature().to_space(space), &|leg: Leg| {
        (leg.flavor == Flavor::F).then(|| terms.clone())
    })
}

/// B_{•→F}: expands fat = F + ½·fork, 𝒲 to 𝒲_F and Ŵ to Ŵ_F.
pub fn basis_dot_to_f(s: &FormalSum) -> Result<FormalSum> {
    require("BdotF", s, &[Space::W, Space::WHat])?;
    let space = if s.signature().space == Space::W { Space::WF } else { Space::WHatF };
    let terms = vec![(qi(1), Fragment::leg(Leg::F)), (q(1, 2), fork())];
    substitute(s, s.signature().to_space(space), &|leg: Leg| {
        (leg.flavor == Flavor::Fat).then(|| terms.clone())
    })
}

/// Υ = B_{F→•}∘φ_ℬ, ℬ to 𝒲.
pub fn upsilon(s: &FormalSum) -> Result<FormalSum> {
    basis_f_to_dot(&phi_b(s)?)
}

/// Raw F-leg expansion of one generator, before canonical merging.
pub fn f_expansion_raw(d: &Diagram) -> Result<Vec<(Coeff, Diagram)>> {
    let terms = expansion(-1);
    expand_legs(d, &|leg: Leg| (leg.flavor == Flavor::F).then(|| terms.clone()))
}

/// φ_𝒜: every leg becomes an F-leg, 𝒜_loops to Ŵ_∧.
pub fn phi_a(s: &FormalSum) -> Result<FormalSum> {
    require("phi_A", s, &[Space::ALoops])?;
    let out = s.signature().to_space(Space::WWedge);
    Ok(s.map_terms(out, |d, c, acc| {
        acc.add_raw(&d.map_flavors(|_| Flavor::F), c)
    }))
}

/// Inverse of φ_𝒜 on the summand of Ŵ_∧ without grade-1 legs.
pub fn phi_a_inverse(s: &FormalSum) -> Result<FormalSum> {
    require("phi_A_inverse", s, &[Space::WWedge])?;
    let mut out = FormalSum::zero(s.signature().to_space(Space::ALoops));
    for (d, c) in s.sorted() {
        let j = d.count_g1();
        if j > 0 {
            return Err(MapError::NotInZeroSummand(j));
        }
        out.add_raw(&d.map_flavors(|_| Flavor::Fat), c);
    }
    Ok(out)
}

/// ι̂: turns the ι-vertex into a grade-1 leg at the far left.
pub fn hat_iota(s: &FormalSum) -> Result<FormalSum> {
    let sig = s.signature();
    if !sig.iota {
        return Err(MapError::Domain {
            map: "hat_iota".into(),
            sig: sig.name(),
        });
    }
    let line = if sig.uses_lines() { Line::Nc } else { Line::None };
    let mut out = FormalSum::zero(sig.to_plain());
    for (d, c) in s.sorted() {
        out.add_raw(&d.iota_to_leg(line)?, c);
    }
    Ok(out)
}
