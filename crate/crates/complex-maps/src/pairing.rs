//! Pairings of grade-1 legs, the map λ: Ŵ_F → Ŵ_∧, and equality in the
//! Weil quotients by transport into Ŵ_∧.

use crate::basis::basis_dot_to_f;
use crate::error::{MapError, Result};
use crate::expand::require;
use diagram_core::{q, Coeff, Diagram, Flavor, FormalSum, Signature, Space};
use num_traits::One;
use relations_engine::with_shared;

/// A set of mutually disjoint pairs of grade-1 leg positions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Pairing {
    /// The pairs, each as `(smaller, larger)` position.
    pub pairs: Vec<(usize, usize)>,
}

impl Pairing {
    /// Builds a pairing, checking it against a diagram.
    pub fn new(pairs: &[(usize, usize)], d: &Diagram) -> Result<Self> {
        let mut seen = vec![false; d.nlegs()];
        let mut out = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            let (a, b) = (a.min(b), a.max(b));
            for x in [a, b] {
                if x >= d.nlegs() {
                    return Err(MapError::Pairing(format!("leg {x} does not exist")));
                }
                if d.legs[x].flavor != Flavor::G1 {
                    return Err(MapError::Pairing(format!("leg {x} is not grade 1")));
                }
                if seen[x] {
                    return Err(MapError::Pairing(format!("leg {x} is used twice")));
                }
                seen[x] = true;
            }
            if a == b {
                return Err(MapError::Pairing(format!("leg {a} paired with itself")));
            }
            out.push((a, b));
        }
        Ok(Pairing { pairs: out })
    }
}

/// All pairings of the grade-1 legs of `d`, the empty one included.
pub fn pairings(d: &Diagram) -> Vec<Pairing> {
    let g1: Vec<usize> = (0..d.nlegs()).filter(|&i| d.legs[i].flavor == Flavor::G1).collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(rest: &[usize], current: &mut Vec<(usize, usize)>, out: &mut Vec<Pairing>) {
        let Some((&first, tail)) = rest.split_first() else {
            out.push(Pairing { pairs: current.clone() });
            return;
        };
        rec(tail, current, out);
        for (i, &other) in tail.iter().enumerate() {
            current.push((first, other));
            let mut remaining = tail.to_vec();
            remaining.remove(i);
            rec(&remaining, current, out);
            current.pop();
        }
    }
    rec(&g1, &mut current, &mut out);
    out
}

/// The raw result of a pairing's action: coefficient and glued diagram.
///
/// Pairs are applied last to first; for each, one leg moves next to the
/// other past the grade-1 legs in between, the two are glued and the term
/// is halved.
pub fn pairing_action_raw(p: &Pairing, d: &Diagram) -> Result<(Coeff, Diagram)> {
    let p = Pairing::new(&p.pairs, d)?;
    let mut cur = d.clone();
    let mut index: Vec<usize> = (0..d.nlegs()).collect();
    let mut coeff = Coeff::one();
    for &(x, y) in p.pairs.iter().rev() {
        let (a, b) = (index[x].min(index[y]), index[x].max(index[y]));
        let between = cur.legs[a + 1..b].iter().filter(|l| l.flavor == Flavor::G1).count();
        if between % 2 == 1 {
            coeff = -coeff;
        }
        coeff *= q(1, 2);
        cur = cur.glue_legs(a, b);
        for i in index.iter_mut() {
            if *i > b {
                *i -= 2;
            } else if *i > a {
                *i -= 1;
            }
        }
    }
    Ok((coeff, cur))
}

fn wedge_signature(d: &Diagram) -> Signature {
    Signature {
        space: Space::WWedge,
        iota: d.iota,
    }
}

/// D_℘(w) as a sum in Ŵ_∧.
pub fn pairing_action(p: &Pairing, d: &Diagram) -> Result<FormalSum> {
    let (c, e) = pairing_action_raw(p, d)?;
    let mut out = FormalSum::zero(wedge_signature(d));
    out.add_raw(&e, &c);
    Ok(out)
}

/// λ: Ŵ_F to Ŵ_∧, the sum over all pairings of the grade-1 legs.
pub fn lambda(s: &FormalSum) -> Result<FormalSum> {
    require("lambda", s, &[Space::WHatF])?;
    let mut out = FormalSum::zero(s.signature().to_space(Space::WWedge));
    for (d, c) in s.sorted() {
        for p in pairings(d) {
            let (k, e) = pairing_action_raw(&p, d)?;
            out.add_raw(&e, &(c * k));
        }
    }
    Ok(out)
}

/// Transports a Ŵ, Ŵ_F or Ŵ_∧ sum into Ŵ_∧.
pub fn to_wedge(s: &FormalSum) -> Result<FormalSum> {
    match s.signature().space {
        Space::WHat => lambda(&basis_dot_to_f(s)?),
        Space::WHatF => lambda(s),
        _ => {
            require("to_wedge", s, &[Space::WWedge])?;
            Ok(s.clone())
        }
    }
}

/// Whether a Ŵ, Ŵ_F or Ŵ_∧ sum vanishes, decided in Ŵ_∧ after transport.
pub fn hat_is_zero(s: &FormalSum, max_weight: usize) -> Result<bool> {
    let t = to_wedge(s)?;
    let w = max_weight.max(t.max_weight());
    Ok(with_shared(|qt| qt.is_zero(&t, w))?)
}

/// Equality in Ŵ, Ŵ_F or Ŵ_∧ by transport into Ŵ_∧.
pub fn hat_equal(a: &FormalSum, b: &FormalSum, max_weight: usize) -> Result<bool> {
    a.same_signature(b)?;
    hat_is_zero(&a.minus(b), max_weight)
}
