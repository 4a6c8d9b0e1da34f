//! Two-line machinery: i_n, i_c, θ, ω, the disc evaluations, ∫, s_𝒯 and s.

use crate::error::Result;
use crate::expand::{expand_legs, factorial, koszul_sign, require, signed_average, substitute};
use diagram_core::{qi, Coeff, Diagram, Flavor, FormalSum, Fragment, Leg, Line, Signature, Space};
use num_traits::One;

/// Which line [`inject_line`] puts the legs on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Non-commutative line (i_n).
    Nc,
    /// Commutative line (i_c).
    C,
}

/// i_n / i_c: 𝒲̃ to 𝒯, tagging every leg with one line.
pub fn inject_line(side: Side, s: &FormalSum) -> Result<FormalSum> {
    require("inject_line", s, &[Space::WTilde])?;
    let line = match side {
        Side::Nc => Line::Nc,
        Side::C => Line::C,
    };
    Ok(s.map_terms(s.signature().to_space(Space::T), |d, c, acc| {
        acc.add_raw(&d.with_lines(line), c)
    }))
}

fn on(flavor: Flavor, line: Line) -> Fragment {
    Fragment::leg(Leg::on(flavor, line))
}

/// The θ substitution for one leg kind.
pub fn theta_rule(flavor: Flavor) -> Vec<(Coeff, Fragment)> {
    match flavor {
        Flavor::G1 => vec![
            (qi(1), on(Flavor::G1, Line::Nc).with_discs(0, 1)),
            (qi(1), on(Flavor::G1, Line::C)),
            (qi(-1), on(Flavor::G1, Line::C).with_discs(0, 1)),
        ],
        _ => vec![
            (qi(1), on(Flavor::Fat, Line::Nc).with_discs(0, 1)),
            (qi(1), on(Flavor::Fat, Line::C)),
            (qi(-1), on(Flavor::Fat, Line::C).with_discs(0, 1)),
            (qi(1), on(Flavor::G1, Line::Nc).with_discs(1, 0)),
            (qi(-1), on(Flavor::G1, Line::C).with_discs(1, 0)),
        ],
    }
}

/// Raw θ-expansion of one generator, before canonicalization.
pub fn theta_raw(d: &Diagram) -> Result<Vec<(Coeff, Diagram)>> {
    expand_legs(d, &|leg: Leg| Some(theta_rule(leg.flavor)))
}

/// θ: 𝒲̃ to 𝒯_dR, each leg becoming `t·(nc) + (1−t)·(c)` and its d-image.
pub fn theta(s: &FormalSum) -> Result<FormalSum> {
    require("theta", s, &[Space::WTilde])?;
    substitute(s, s.signature().to_space(Space::TdR), &|leg: Leg| Some(theta_rule(leg.flavor)))
}

/// ω: 𝒯 to 𝒲̃. Commutative-line legs move right past the others, keeping
/// their order; then the signed average over their permutations is taken and
/// line tags are erased.
pub fn omega_collapse(s: &FormalSum) -> Result<FormalSum> {
    require("omega", s, &[Space::T])?;
    let mut out = FormalSum::zero(s.signature().to_space(Space::WTilde));
    for (d, c) in s.sorted() {
        let mut order: Vec<usize> = (0..d.nlegs()).filter(|&i| d.legs[i].line != Line::C).collect();
        let j = order.len();
        order.extend((0..d.nlegs()).filter(|&i| d.legs[i].line == Line::C));
        let sign = koszul_sign(&d.legs, &order);
        let moved = d.permute_legs(&order).with_lines(Line::None);
        let c = if sign < 0 { -c.clone() } else { c.clone() };
        let tail: Vec<usize> = (j..d.nlegs()).collect();
        signed_average(&moved, &tail, &c, &mut out);
    }
    Ok(out)
}

/// Endpoint of [`eval_disc`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Endpoint {
    /// t = 0: every disc kills the term.
    Zero,
    /// t = 1: filled discs kill the term, open discs are dropped.
    One,
}

/// Ev₀ / Ev₁: 𝒯_dR to 𝒯.
pub fn eval_disc(endpoint: Endpoint, s: &FormalSum) -> Result<FormalSum> {
    require("eval_disc", s, &[Space::TdR])?;
    let mut out = FormalSum::zero(s.signature().to_space(Space::T));
    for (d, c) in s.sorted() {
        let keep = match endpoint {
            Endpoint::Zero => d.filled == 0 && d.open == 0,
            Endpoint::One => d.filled == 0,
        };
        if keep {
            let mut e = d.clone();
            e.open = 0;
            out.add_raw(&e, c);
        }
    }
    Ok(out)
}

/// ∫: 𝒯_dR to 𝒯. Terms with exactly one filled disc (already at the far
/// left) and `n` open discs give the bare diagram times 1/(n+1).
pub fn integrate_discs(s: &FormalSum) -> Result<FormalSum> {
    require("int", s, &[Space::TdR])?;
    let mut out = FormalSum::zero(s.signature().to_space(Space::T));
    for (d, c) in s.sorted() {
        if d.filled != 1 {
            continue;
        }
        let mut e = d.clone();
        let n = e.open;
        e.filled = 0;
        e.open = 0;
        out.add_raw(&e, &(c / qi(n as i64 + 1)));
    }
    Ok(out)
}

/// A 𝒯_dR generator with a filled disc written just left of leg `pos`,
/// brought to normal form (disc at the far left).
pub fn with_filled_disc_at(d: &Diagram, pos: usize, open: u32) -> FormalSum {
    let sig = Signature {
        space: Space::TdR,
        iota: d.iota,
    };
    let mut e = d.clone();
    e.filled += 1;
    e.open += open;
    let sign = if d.grade_before(pos) % 2 == 1 { -1 } else { 1 };
    let mut out = FormalSum::zero(sig);
    out.add_signed(&e, sign, &Coeff::one());
    out
}

/// `∫₀¹ t^k (1−t)^m dt = k!·m!/(k+m+1)!`.
pub fn beta(k: usize, m: usize) -> Coeff {
    factorial(k) * factorial(m) / factorial(k + m + 1)
}

/// s_𝒯 = ∫∘θ: 𝒲̃ to 𝒯, computed in closed form.
///
/// Only terms with one filled disc survive ∫; the disc comes from one fat
/// leg `p`, which becomes `(nc − c)` grade-1, while every other leg is on
/// the non-commutative line with weight `t` or the commutative line with
/// weight `1 − t`.
pub fn homotopy_st(s: &FormalSum) -> Result<FormalSum> {
    require("sT", s, &[Space::WTilde])?;
    let mut out = FormalSum::zero(s.signature().to_space(Space::T));
    for (d, c) in s.sorted() {
        let n = d.nlegs();
        for p in 0..n {
            if d.legs[p].flavor != Flavor::Fat {
                continue;
            }
            let sign = if d.grade_before(p) % 2 == 1 { -c.clone() } else { c.clone() };
            let others: Vec<usize> = (0..n).filter(|&i| i != p).collect();
            for mask in 0u64..(1u64 << others.len()) {
                let mut e = d.clone();
                let mut k = 0;
                for (bit, &i) in others.iter().enumerate() {
                    let line = if mask >> bit & 1 == 1 {
                        k += 1;
                        Line::Nc
                    } else {
                        Line::C
                    };
                    e.legs[i].line = line;
                }
                let w = &sign * beta(k, others.len() - k);
                e.legs[p] = Leg::on(Flavor::G1, Line::Nc);
                out.add_raw(&e, &w);
                e.legs[p] = Leg::on(Flavor::G1, Line::C);
                out.add_raw(&e, &-w);
            }
        }
    }
    Ok(out)
}

/// s_𝒯 computed literally as ∫∘θ.
pub fn homotopy_st_literal(s: &FormalSum) -> Result<FormalSum> {
    integrate_discs(&theta(s)?)
}

/// s = ω∘s_𝒯: the ι-homotopy on 𝒲̃ between id and χ_𝒲∘τ.
pub fn homotopy_s(s: &FormalSum) -> Result<FormalSum> {
    omega_collapse(&homotopy_st(s)?)
}
