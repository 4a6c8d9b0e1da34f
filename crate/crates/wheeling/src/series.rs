//! The Wheels element Ω = exp_⊔(Σ b_{2n}·ω_{2n}), truncated by leg count,
//! and its coefficient file.

use crate::error::{Result, WheelError};
use crate::operate::operate;
use diagram_core::{disjoint_union, format_coeff, qi, Coeff, Diagram, FormalSum, Leg, Signature, Space};
use std::collections::BTreeMap;
use std::str::FromStr;

/// Largest supported truncation order (legs).
pub const MAX_ORDER: usize = 8;

/// Wheel coefficients keyed by leg count `2n`.
pub type Coefficients = BTreeMap<usize, Coeff>;

/// Contents of the shipped coefficient file.
pub const GOLDEN: &str = include_str!("../omega_coefficients.txt");

/// The wheel ω_k as a symmetric sum.
pub fn wheel(k: usize) -> FormalSum {
    FormalSum::from_diagram(&Diagram::wheel(k, Leg::FAT), Signature::plain(Space::B))
}

/// Parses `b2 = 1/48` style lines; `#` starts a comment.
pub fn parse_coefficients(text: &str) -> Result<Coefficients> {
    let mut out = Coefficients::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |detail: &str| WheelError::Golden {
            line: i + 1,
            detail: detail.to_string(),
        };
        let (name, value) = line.split_once('=').ok_or_else(|| err("expected `bN = value`"))?;
        let k: usize = name
            .trim()
            .strip_prefix('b')
            .and_then(|n| n.parse().ok())
            .ok_or_else(|| err("expected a name like b2"))?;
        let c = Coeff::from_str(value.trim()).map_err(|_| err("expected an exact rational"))?;
        out.insert(k, c);
    }
    Ok(out)
}

/// Formats coefficients in the file format.
pub fn format_coefficients(c: &Coefficients) -> String {
    c.iter().map(|(k, v)| format!("b{k} = {}\n", format_coeff(v))).collect()
}

/// The shipped coefficients.
pub fn default_coefficients() -> Result<Coefficients> {
    parse_coefficients(GOLDEN)
}

/// A truncated Wheels element.
#[derive(Clone, Debug)]
pub struct WheelsSeries {
    /// Truncation order: terms with more legs are dropped.
    pub order: usize,
    /// Coefficients used, keyed by wheel leg count.
    pub coefficients: Coefficients,
    /// The assembled sum in ℬ.
    pub sum: FormalSum,
}

fn truncate(s: &FormalSum, order: usize) -> FormalSum {
    s.filter(|d| d.nlegs() <= order)
}

/// Assembles exp_⊔(Σ b_{2n}·ω_{2n}) up to `order` legs from given coefficients.
///
/// Every even wheel with at most `order` legs needs a coefficient.
pub fn wheels_series_with(order: usize, coefficients: &Coefficients) -> Result<WheelsSeries> {
    if order > MAX_ORDER {
        return Err(WheelError::OrderTooLarge { order, cap: MAX_ORDER });
    }
    let sig = Signature::plain(Space::B);
    let mut x = FormalSum::zero(sig);
    for k in (2..=order).step_by(2) {
        let b = coefficients.get(&k).ok_or(WheelError::MissingCoefficient(k))?;
        x.add_scaled(&wheel(k), b);
    }
    let mut sum = FormalSum::unit(sig);
    let mut term = FormalSum::unit(sig);
    for j in 1.. {
        term = truncate(&disjoint_union(&term, &x)?, order).scaled(&(qi(1) / qi(j)));
        if term.is_zero() {
            break;
        }
        sum.add_assign(&term);
    }
    let used = coefficients.range(..=order).map(|(k, v)| (*k, v.clone())).collect();
    Ok(WheelsSeries {
        order,
        coefficients: used,
        sum,
    })
}

/// Ω up to `order` legs with the shipped coefficients.
pub fn wheels_series(order: usize) -> Result<WheelsSeries> {
    wheels_series_with(order, &default_coefficients()?)
}

/// Largest leg count in a sum.
pub fn max_legs(x: &FormalSum) -> usize {
    x.iter().map(|(d, _)| d.nlegs()).max().unwrap_or(0)
}

/// ∂_Ω(x), using exactly the terms of Ω with at most as many legs as `x` has.
pub fn partial_omega_with(x: &FormalSum, coefficients: &Coefficients) -> Result<FormalSum> {
    let order = max_legs(x) / 2 * 2;
    let omega = wheels_series_with(order, coefficients)?;
    operate(&omega.sum, x)
}

/// ∂_Ω(x) truncated at a given order.
pub fn partial_omega(x: &FormalSum, order: usize) -> Result<FormalSum> {
    operate(&wheels_series(order)?.sum, x)
}
