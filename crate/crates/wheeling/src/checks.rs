//! The multiplicativity statements: the homotopy identity in 𝒲̃ and the
//! wheeling identity in 𝒜.

use crate::error::Result;
use crate::lemma::{pull_back, transport, vanishes, wheeled_average};
use crate::series::Coefficients;
use complex_maps::{basis_dot_to_f, chi_w, hat_is_zero, homotopy_s, project_pi, upsilon};
use diagram_core::{disjoint_union, juxtapose, FormalSum, Signature, Space};
use diff_operators::apply_named;

/// Outcome of [`check_hw`].
#[derive(Clone, Debug)]
pub struct HwReport {
    /// χ_𝒲Υ(v) juxtaposed with χ_𝒲Υ(w), in 𝒲̃.
    pub lhs: FormalSum,
    /// χ_𝒲Υ(v ⊔ w), in 𝒲̃.
    pub rhs: FormalSum,
    /// The correction term s(lhs).
    pub x: FormalSum,
    /// Whether ι(x) vanishes in 𝒲̃_ι.
    pub iota_zero: bool,
    /// Whether lhs = rhs + d(x) in 𝒲̃.
    pub equal: bool,
}

impl HwReport {
    /// Both conditions hold.
    pub fn holds(&self) -> bool {
        self.iota_zero && self.equal
    }
}

/// Builds x = s(χ_𝒲Υ(v)·χ_𝒲Υ(w)) and checks ι(x) = 0 and
/// χ_𝒲Υ(v)·χ_𝒲Υ(w) = χ_𝒲Υ(v ⊔ w) + d(x).
pub fn check_hw(v: &FormalSum, w: &FormalSum) -> Result<HwReport> {
    let a = chi_w(&upsilon(v)?)?;
    let b = chi_w(&upsilon(w)?)?;
    let lhs = juxtapose(&a, &b)?;
    let rhs = chi_w(&upsilon(&disjoint_union(v, w)?)?)?;
    let x = homotopy_s(&lhs)?;
    let iota_zero = vanishes(&apply_named("iota", &x)?)?;
    let dx = apply_named("d", &x)?;
    let equal = vanishes(&lhs.minus(&rhs).minus(&dx))?;
    Ok(HwReport {
        lhs,
        rhs,
        x,
        iota_zero,
        equal,
    })
}

/// Which optional parts of [`check_wheeling`] to run.
#[derive(Clone, Copy, Debug, Default)]
pub struct WheelingOptions {
    /// Re-derive both sides through π, B_{•→F}, λ and φ_𝒜⁻¹.
    pub rederive: bool,
    /// Check B_{•→F}∘π(d(x)) = 0 in Ŵ_F for the correction term x.
    pub dispatch: bool,
}

/// Outcome of [`check_wheeling`].
#[derive(Clone, Debug)]
pub struct WheelingReport {
    /// χ_ℬ∂_Ω(v ⊔ w), in 𝒜.
    pub lhs: FormalSum,
    /// χ_ℬ∂_Ω(v)·χ_ℬ∂_Ω(w), in 𝒜.
    pub rhs: FormalSum,
    /// Whether lhs = rhs in 𝒜.
    pub equal: bool,
    /// Whether the transported right side of the homotopy identity matches
    /// lhs, and the transported left side matches rhs, in 𝒜_loops.
    pub rederived: Option<bool>,
    /// Whether B_{•→F}∘π(d(x)) vanishes in Ŵ_F.
    pub dispatch: Option<bool>,
}

impl WheelingReport {
    /// Every condition that was checked holds.
    pub fn holds(&self) -> bool {
        self.equal && self.rederived.unwrap_or(true) && self.dispatch.unwrap_or(true)
    }
}

/// Checks χ_ℬ∂_Ω(v ⊔ w) = χ_ℬ∂_Ω(v)·χ_ℬ∂_Ω(w) in 𝒜.
pub fn check_wheeling(
    v: &FormalSum,
    w: &FormalSum,
    coefficients: &Coefficients,
    options: WheelingOptions,
) -> Result<WheelingReport> {
    let a = Signature::plain(Space::A);
    let av = |x: &FormalSum| -> Result<FormalSum> { Ok(wheeled_average(x, coefficients)?.reinterpret(a)) };
    let lhs = av(&disjoint_union(v, w)?)?;
    let rhs = juxtapose(&av(v)?, &av(w)?)?;
    let equal = vanishes(&lhs.minus(&rhs))?;
    let mut rederived = None;
    let mut dispatch = None;
    if options.rederive || options.dispatch {
        let hw = check_hw(v, w)?;
        if options.rederive {
            let loops = Signature::plain(Space::ALoops);
            let t_rhs = pull_back(&transport(&hw.rhs)?)?.zero_summand;
            let t_lhs = pull_back(&transport(&hw.lhs)?)?.zero_summand;
            let ok = vanishes(&t_rhs.minus(&lhs.reinterpret(loops)))?
                && vanishes(&t_lhs.minus(&rhs.reinterpret(loops)))?;
            rederived = Some(ok);
        }
        if options.dispatch {
            let dx = apply_named("d", &hw.x)?;
            let z = basis_dot_to_f(&project_pi(&dx)?)?;
            dispatch = Some(hat_is_zero(&z, z.max_weight())?);
        }
    }
    Ok(WheelingReport {
        lhs,
        rhs,
        equal,
        rederived,
        dispatch,
    })
}

