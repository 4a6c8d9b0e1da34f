//! The composite map φ_𝒜⁻¹∘λ∘B_{•→F}∘π∘χ_𝒲∘Υ, its comparison with
//! χ_ℬ∘∂_Ω, and the derivation of the wheel coefficients from it.

use crate::error::{Result, WheelError};
use crate::operate::operate;
use crate::series::{wheel, MAX_ORDER, wheels_series_with, Coefficients};
use complex_maps::{basis_dot_to_f, chi_b, chi_w, lambda, phi_a_inverse, project_pi, upsilon};
use diagram_core::{format_coeff, Coeff, FormalSum, Signature, Space};
use num_traits::Zero;
use relations_engine::with_shared;

/// λ∘B_{•→F}∘π: 𝒲̃ to Ŵ_∧.
pub fn transport(s: &FormalSum) -> Result<FormalSum> {
    Ok(lambda(&basis_dot_to_f(&project_pi(s)?)?)?)
}

/// A Ŵ_∧ sum split by grade-1 leg count.
#[derive(Clone, Debug)]
pub struct Pulled {
    /// φ_𝒜⁻¹ of the summand without grade-1 legs, in 𝒜_loops.
    pub zero_summand: FormalSum,
    /// The remaining summands, left in Ŵ_∧.
    pub residual: FormalSum,
}

/// Splits off the summand without grade-1 legs and pulls it back to 𝒜_loops.
pub fn pull_back(wedge: &FormalSum) -> Result<Pulled> {
    let zero = wedge.filter(|d| d.count_g1() == 0);
    let residual = wedge.filter(|d| d.count_g1() > 0);
    Ok(Pulled {
        zero_summand: phi_a_inverse(&zero)?,
        residual,
    })
}

/// φ_𝒜⁻¹∘λ∘B_{•→F}∘π∘χ_𝒲∘Υ on a symmetric sum.
pub fn composite(x: &FormalSum) -> Result<Pulled> {
    pull_back(&transport(&chi_w(&upsilon(x)?)?)?)
}

/// χ_ℬ∘∂_Ω(x) in 𝒜_loops, with Ω built from the given coefficients.
pub fn wheeled_average(x: &FormalSum, coefficients: &Coefficients) -> Result<FormalSum> {
    let y = crate::series::partial_omega_with(x, coefficients)?;
    Ok(chi_b(&y)?.reinterpret(Signature::plain(Space::ALoops)))
}

/// Whether a sum vanishes in its quotient, with relations up to its own weight.
pub fn vanishes(s: &FormalSum) -> Result<bool> {
    if s.is_zero() {
        return Ok(true);
    }
    let w = s.max_weight();
    Ok(with_shared(|q| q.is_zero(s, w))?)
}

/// Outcome of [`check_composite_lemma`].
#[derive(Clone, Debug)]
pub struct CompositeReport {
    /// The composite applied to the input, in 𝒜_loops.
    pub lhs: FormalSum,
    /// χ_ℬ∘∂_Ω of the input, in 𝒜_loops.
    pub rhs: FormalSum,
    /// Terms of the composite carrying grade-1 legs before quotienting.
    pub residual_terms: usize,
    /// Whether those terms vanish in Ŵ_∧, if checked.
    pub residual_zero: Option<bool>,
    /// Whether both sides agree in 𝒜_loops.
    pub equal: bool,
}

/// Compares the composite with χ_ℬ∘∂_Ω on one input.
pub fn check_composite_lemma(
    x: &FormalSum,
    coefficients: &Coefficients,
    check_residual: bool,
) -> Result<CompositeReport> {
    let pulled = composite(x)?;
    let rhs = wheeled_average(x, coefficients)?;
    let equal = vanishes(&pulled.zero_summand.minus(&rhs))?;
    let residual_zero = if check_residual {
        Some(vanishes(&pulled.residual)?)
    } else {
        None
    };
    Ok(CompositeReport {
        lhs: pulled.zero_summand,
        residual_terms: pulled.residual.len(),
        residual_zero,
        rhs,
        equal,
    })
}

/// Solves for b_{2n}, n = 1..max_order/2, one order at a time.
///
/// At order `k` the input is the wheel ω_k; b_k enters χ_ℬ∘∂_Ω(ω_k) only
/// through the single term b_k·χ_ℬ(∂_{ω_k}(ω_k)), so each step is a linear
/// equation in one unknown, decided modulo relations in 𝒜_loops.
pub fn derive_wheels_coefficients(max_order: usize) -> Result<Coefficients> {
    if max_order > MAX_ORDER {
        return Err(WheelError::OrderTooLarge { order: max_order, cap: MAX_ORDER });
    }
    let mut found = Coefficients::new();
    for k in (2..=max_order).step_by(2) {
        let x = wheel(k);
        let lhs = composite(&x)?.zero_summand;
        let mut trial = found.clone();
        trial.insert(k, Coeff::zero());
        let omega = wheels_series_with(k, &trial)?;
        let known = chi_b(&operate(&omega.sum, &x)?)?.reinterpret(Signature::plain(Space::ALoops));
        let unknown = chi_b(&operate(&wheel(k), &x)?)?.reinterpret(Signature::plain(Space::ALoops));
        let r = lhs.minus(&known);
        let w = r.max_weight().max(unknown.max_weight());
        let red = with_shared(|q| q.reduce_many(&[r, unknown], w))?;
        let (rr, vv) = (&red[0], &red[1]);
        let Some((pivot, vc)) = vv.sorted().first().map(|(d, c)| ((*d).clone(), (*c).clone())) else {
            return Err(WheelError::Singular {
                order: k,
                detail: "the wheel term vanishes modulo relations".into(),
            });
        };
        let b = rr.coeff(&pivot) / vc;
        if rr.minus(&vv.scaled(&b)).is_zero() {
            found.insert(k, b);
        } else {
            return Err(WheelError::Singular {
                order: k,
                detail: format!(
                    "no solution: residue has {} terms after b = {}",
                    rr.minus(&vv.scaled(&b)).len(),
                    format_coeff(&b)
                ),
            });
        }
    }
    Ok(found)
}
