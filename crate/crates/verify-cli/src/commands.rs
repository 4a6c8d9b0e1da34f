//! The non-suite subcommands: apply, eq, derive-omega and enumerate.

use crate::error::{read_file, write_file, CliError, Result};
use complex_maps::{apply_map, MAP_NAMES};
use diagram_core::{parse, serialize, FormalSum, Signature, Space};
use diff_operators::apply_named;
use relations_engine::{enumerate_slice, quotient_equal, with_shared, SliceKey};
use wheeling::{derive_wheels_coefficients, format_coefficients, parse_coefficients, Coefficients};

/// Reads and parses a diagram file.
pub fn load_sum(path: &str) -> Result<FormalSum> {
    Ok(parse(&read_file(path)?)?)
}

/// The space-specific operator meant by the generic names `d` and `iota`.
pub fn resolve_operator(name: &str, space: Space) -> &str {
    match (name, space) {
        ("d", Space::WF | Space::WHatF) => "d_F",
        ("d", Space::T) => "d_T",
        ("d", Space::TdR) => "d_TdR",
        ("iota", Space::WF | Space::WHatF) => "iota_F",
        ("iota", Space::T | Space::TdR) => "iota_T",
        ("iota", Space::WWedge) => "iota_wedge",
        _ => name,
    }
}

/// Applies a named map, or a built-in operator on the input's space.
pub fn apply_by_name(name: &str, s: &FormalSum) -> Result<FormalSum> {
    if MAP_NAMES.contains(&name) {
        Ok(apply_map(name, s)?)
    } else {
        Ok(apply_named(resolve_operator(name, s.signature().space), s)?)
    }
}

/// Outcome of a quotient comparison.
#[derive(Clone, Debug)]
pub struct EqOutcome {
    /// Whether the sides agree in the quotient.
    pub equal: bool,
    /// Terms of lhs − rhs before reduction.
    pub difference_terms: usize,
    /// Terms of its normal form modulo relations.
    pub reduced_terms: usize,
}

/// Decides `lhs = rhs` in the quotient up to `max_weight`.
pub fn quotient_compare(lhs: &FormalSum, rhs: &FormalSum, space: Option<&str>, max_weight: usize) -> Result<EqOutcome> {
    lhs.same_signature(rhs)?;
    let sig = lhs.signature();
    if let Some(name) = space {
        let want = Signature::parse(name).ok_or_else(|| CliError::Config(format!("unknown space `{name}`")))?;
        if want != sig {
            return Err(CliError::Config(format!("inputs are in {sig}, not {want}")));
        }
    }
    let top = lhs.max_weight().max(rhs.max_weight());
    if top > max_weight {
        return Err(CliError::Config(format!("inputs reach weight {top}, above the bound {max_weight}")));
    }
    let key = SliceKey::weight(sig, max_weight);
    let equal = quotient_equal(lhs, rhs, &key)?;
    let diff = lhs.minus(rhs);
    let reduced = with_shared(|q| q.reduce_many(std::slice::from_ref(&diff), max_weight))?;
    Ok(EqOutcome {
        equal,
        difference_terms: diff.len(),
        reduced_terms: reduced[0].len(),
    })
}

/// Header written above derived coefficients.
pub const GOLDEN_HEADER: &str =
    "# Wheel coefficients b_{2n} of Omega = exp(sum b_{2n} w_{2n}), keyed by leg count.\n# Regenerate with: wheelforge derive-omega --order 4 --out crates/wheeling/omega_coefficients.txt\n";

/// Outcome of a derivation against an optional existing file.
#[derive(Clone, Debug)]
pub struct DeriveOutcome {
    /// Freshly derived coefficients.
    pub derived: Coefficients,
    /// Orders where an existing file disagrees: (order, stored, derived).
    pub conflicts: Vec<(usize, String, String)>,
    /// Text written (existing entries merged with derived ones).
    pub text: String,
}

/// Derives coefficients up to `order` and merges them into `existing`.
pub fn derive_omega(order: usize, existing: Option<&str>) -> Result<DeriveOutcome> {
    let derived = derive_wheels_coefficients(order)?;
    let mut merged = match existing {
        Some(t) => parse_coefficients(t)?,
        None => Coefficients::new(),
    };
    let mut conflicts = Vec::new();
    for (k, v) in &derived {
        if let Some(old) = merged.get(k) {
            if old != v {
                conflicts.push((
                    *k,
                    diagram_core::format_coeff(old),
                    diagram_core::format_coeff(v),
                ));
                continue;
            }
        }
        merged.insert(*k, v.clone());
    }
    Ok(DeriveOutcome {
        derived,
        conflicts,
        text: format!("{GOLDEN_HEADER}{}", format_coefficients(&merged)),
    })
}

/// Derives and writes a coefficient file; returns the outcome.
pub fn derive_omega_to(order: usize, out: Option<&str>) -> Result<DeriveOutcome> {
    let existing = match out {
        Some(p) if std::path::Path::new(p).exists() => Some(read_file(p)?),
        _ => None,
    };
    let res = derive_omega(order, existing.as_deref())?;
    if let Some(p) = out {
        if res.conflicts.is_empty() {
            write_file(p, &res.text)?;
        }
    }
    Ok(res)
}

/// Serializes the basis of a slice, one diagram per term.
pub fn enumerate_text(sig: Signature, max_weight: usize, discs: usize) -> Result<(usize, String)> {
    let key = SliceKey::weight(sig, max_weight).with_discs(discs);
    let basis = enumerate_slice(&key)?;
    let mut sum = FormalSum::zero(sig);
    for d in &basis.diagrams {
        sum.add_canonical(d.clone(), &diagram_core::qi(1));
    }
    Ok((basis.len(), serialize(&sum)))
}
