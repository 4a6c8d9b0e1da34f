//! Leg-by-leg substitution products and signed averaging over leg orders.

use crate::error::{MapError, Result};
use diagram_core::{qi, Coeff, Diagram, FormalSum, Fragment, Leg, Signature, Space};
use itertools::Itertools;
use num_traits::One;

/// Replacement for one leg: weighted fragments, or `None` to keep the leg.
pub type LegRule<'a> = dyn Fn(Leg) -> Option<Vec<(Coeff, Fragment)>> + 'a;

/// Expands every leg of `d` by `rule`, processing positions right to left.
///
/// Returns the raw signed terms before canonicalization; terms with two
/// filled discs are dropped.
pub fn expand_legs(d: &Diagram, rule: &LegRule<'_>) -> Result<Vec<(Coeff, Diagram)>> {
    let mut terms = vec![(Coeff::one(), d.clone())];
    for p in (0..d.nlegs()).rev() {
        let Some(frags) = rule(d.legs[p]) else { continue };
        let mut next = Vec::with_capacity(terms.len() * frags.len());
        for (c, host) in &terms {
            for (k, frag) in &frags {
                if let Some((e, s)) = frag.splice(host, p)? {
                    let c = c * k;
                    next.push((if s < 0 { -c } else { c }, e));
                }
            }
        }
        terms = next;
    }
    Ok(terms)
}

/// Linear extension of [`expand_legs`] into a target signature.
pub fn substitute(s: &FormalSum, out: Signature, rule: &LegRule<'_>) -> Result<FormalSum> {
    let mut acc = FormalSum::zero(out);
    for (d, c) in s.sorted() {
        for (k, e) in expand_legs(d, rule)? {
            acc.add_raw(&e, &(c * k));
        }
    }
    Ok(acc)
}

/// Koszul sign of the reordering where new leg `i` is old leg `order[i]`.
pub fn koszul_sign(legs: &[Leg], order: &[usize]) -> i32 {
    let mut odd = 0u32;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            if order[i] > order[j] && legs[order[i]].grade() % 2 == 1 && legs[order[j]].grade() % 2 == 1 {
                odd += 1;
            }
        }
    }
    if odd % 2 == 1 {
        -1
    } else {
        1
    }
}

/// `n!` as a rational.
pub fn factorial(n: usize) -> Coeff {
    (1..=n).fold(Coeff::one(), |acc, i| acc * qi(i as i64))
}

/// Adds `c/m!` times the signed sum over all permutations of the legs at
/// `positions` (each permutation keeps that set of positions).
pub fn signed_average(d: &Diagram, positions: &[usize], c: &Coeff, out: &mut FormalSum) {
    let m = positions.len();
    let k = c / factorial(m);
    let base: Vec<usize> = (0..d.nlegs()).collect();
    for perm in positions.iter().copied().permutations(m) {
        let mut order = base.clone();
        for (i, &pos) in positions.iter().enumerate() {
            order[pos] = perm[i];
        }
        let sign = koszul_sign(&d.legs, &order);
        out.add_signed(&d.permute_legs(&order), sign, &k);
    }
}

/// Checks that a sum lives in one of the given spaces.
pub fn require(map: &str, s: &FormalSum, spaces: &[Space]) -> Result<()> {
    if spaces.contains(&s.signature().space) {
        Ok(())
    } else {
        Err(MapError::Domain {
            map: map.to_string(),
            sig: s.signature().name(),
        })
    }
}

/// Checks that a sum lives in one of the given spaces without an ι-vertex.
pub fn require_plain(map: &str, s: &FormalSum, spaces: &[Space]) -> Result<()> {
    require(map, s, spaces)?;
    if s.signature().iota {
        return Err(MapError::Domain {
            map: map.to_string(),
            sig: s.signature().name(),
        });
    }
    Ok(())
}
