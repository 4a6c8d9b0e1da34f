//! Substitution rules, the signed sweep and graded commutators.

use crate::error::{OpError, Result};
use diagram_core::{Coeff, Diagram, Flavor, FormalSum, Fragment, Signature, Space};
use num_traits::{One, Zero};

/// Replacement of one leg kind: a combination of fragments.
#[derive(Clone, Debug)]
pub struct SubstitutionRule {
    /// Leg kind consumed.
    pub target: Flavor,
    /// Weighted fragments replacing the leg; empty means the leg is killed.
    pub terms: Vec<(Coeff, Fragment)>,
}

/// A formal linear differential operator.
#[derive(Clone, Debug)]
pub struct Operator {
    /// Display name.
    pub name: String,
    /// Grade `j`; the pass-through sign over grade `g` is `(−1)^{g·j}`.
    pub grade: i32,
    /// Spaces the operator acts on.
    pub spaces: Vec<Space>,
    /// One rule per leg kind.
    pub rules: Vec<SubstitutionRule>,
    /// Whether the operator also acts on the disc word (open ↦ filled).
    pub acts_on_discs: bool,
}

impl Operator {
    /// Rule for a leg kind.
    pub fn rule(&self, f: Flavor) -> Option<&SubstitutionRule> {
        self.rules.iter().find(|r| r.target == f)
    }

    /// Whether any rule introduces the ι-vertex.
    pub fn adds_iota(&self) -> bool {
        self.rules.iter().any(|r| r.terms.iter().any(|(_, f)| f.body.iota))
    }

    fn odd(&self) -> bool {
        self.grade.rem_euclid(2) == 1
    }

    /// Output signature for an input signature.
    pub fn output_signature(&self, sig: Signature) -> Result<Signature> {
        if !self.spaces.contains(&sig.space) || (self.adds_iota() && sig.iota) {
            return Err(OpError::Unsupported {
                op: self.name.clone(),
                sig: sig.name(),
            });
        }
        Ok(if self.adds_iota() { sig.to_iota() } else { sig })
    }
}

/// Sweeps the operator over legs `0..nlegs` of `d`, calling `emit` with each
/// signed raw result.
fn sweep(
    op: &Operator,
    d: &Diagram,
    nlegs: usize,
    mut emit: impl FnMut(Diagram, i32, &Coeff),
) -> Result<()> {
    if op.acts_on_discs && d.filled == 0 && d.open > 0 {
        let mut e = d.clone();
        e.filled = 1;
        e.open -= 1;
        emit(e, 1, &Coeff::from_integer(d.open.into()));
    }
    let mut g = d.filled;
    for p in 0..nlegs {
        let leg = d.legs[p];
        let rule = op.rule(leg.flavor).ok_or_else(|| OpError::MissingRule {
            op: op.name.clone(),
            leg: leg.to_string(),
        })?;
        let sign = if op.odd() && g % 2 == 1 { -1 } else { 1 };
        for (k, frag) in &rule.terms {
            if frag.body.iota && d.iota {
                continue;
            }
            if let Some((e, s)) = frag.splice(d, p)? {
                emit(e, sign * s, k);
            }
        }
        g += leg.grade();
    }
    Ok(())
}

/// Applies an operator to a sum by the signed sweep over leg positions.
pub fn apply(op: &Operator, s: &FormalSum) -> Result<FormalSum> {
    let out_sig = op.output_signature(s.signature())?;
    let mut out = FormalSum::zero(out_sig);
    for (d, c) in s.sorted() {
        sweep(op, d, d.nlegs(), |e, sign, k| out.add_signed(&e, sign, &(c * k)))?;
    }
    Ok(out)
}

/// Applies an operator to the new legs of a fragment (the root is untouched).
pub fn apply_to_fragment(op: &Operator, frag: &Fragment) -> Result<Vec<(Coeff, Fragment)>> {
    let mut out = Vec::new();
    sweep(op, &frag.body, frag.nlegs(), |e, sign, k| {
        let c = if sign < 0 { -k.clone() } else { k.clone() };
        out.push((c, Fragment { body: e }));
    })?;
    Ok(out)
}

/// The graded commutator `[f, g] = f∘g − (−1)^{|f||g|} g∘f` as an operator.
pub fn commutator(f: &Operator, g: &Operator) -> Result<Operator> {
    let spaces: Vec<Space> = f.spaces.iter().copied().filter(|s| g.spaces.contains(s)).collect();
    if spaces.is_empty() {
        return Err(OpError::Unsupported {
            op: format!("[{},{}]", f.name, g.name),
            sig: "disjoint domains".into(),
        });
    }
    let both_odd = f.odd() && g.odd();
    let mut rules = Vec::new();
    for rf in &f.rules {
        let Some(rg) = g.rule(rf.target) else { continue };
        let mut terms: Vec<(Coeff, Fragment)> = Vec::new();
        for (c, x) in &rg.terms {
            for (k, y) in apply_to_fragment(f, x)? {
                terms.push((c * k, y));
            }
        }
        for (c, x) in &rf.terms {
            for (k, y) in apply_to_fragment(g, x)? {
                let k = if both_odd { c * k } else { -(c * k) };
                terms.push((k, y));
            }
        }
        terms.retain(|(k, _)| !k.is_zero());
        rules.push(SubstitutionRule {
            target: rf.target,
            terms,
        });
    }
    Ok(Operator {
        name: format!("[{},{}]", f.name, g.name),
        grade: f.grade + g.grade,
        spaces,
        rules,
        acts_on_discs: false,
    })
}

/// Applies `f∘g − (−1)^{|f||g|} g∘f` directly, as a cross-check of [`commutator`].
pub fn commutator_direct(f: &Operator, g: &Operator, s: &FormalSum) -> Result<FormalSum> {
    let fg = apply(f, &apply(g, s)?)?;
    let gf = apply(g, &apply(f, s)?)?;
    let sign = if f.odd() && g.odd() { Coeff::one() } else { -Coeff::one() };
    let mut out = fg;
    out.add_scaled(&gf, &sign);
    Ok(out)
}
