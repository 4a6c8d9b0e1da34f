//! The gluing operation ∂_{D1}(D2) on symmetric diagrams.

use crate::error::Result;
use diagram_core::{Diagram, FormalSum, Signature, Space};
use itertools::Itertools;

/// Glues legs `pairs[k].0` to `pairs[k].1` of `d`, pair by pair.
pub fn glue_pairs(d: &Diagram, pairs: &[(usize, usize)]) -> Diagram {
    let mut cur = d.clone();
    let mut index: Vec<usize> = (0..d.nlegs()).collect();
    for &(x, y) in pairs {
        let (a, b) = (index[x].min(index[y]), index[x].max(index[y]));
        cur = cur.glue_legs(a, b);
        for i in index.iter_mut() {
            if *i > b {
                *i -= 2;
            } else if *i > a {
                *i -= 1;
            }
        }
    }
    cur
}

/// The raw terms of ∂_{D1}(D2): one glued diagram per injection of the legs
/// of `d1` into the legs of `d2`.
pub fn operate_raw(d1: &Diagram, d2: &Diagram) -> Result<Vec<Diagram>> {
    let (n, m) = (d1.nlegs(), d2.nlegs());
    if n > m {
        return Ok(Vec::new());
    }
    let (joined, _) = d1.juxtapose_raw(d2)?;
    Ok((0..m)
        .permutations(n)
        .map(|sigma| {
            let pairs: Vec<(usize, usize)> = sigma.iter().enumerate().map(|(i, &j)| (i, n + j)).collect();
            glue_pairs(&joined, &pairs)
        })
        .collect())
}

/// ∂_{D1}(D2), extended bilinearly over symmetric sums.
pub fn operate(d1: &FormalSum, d2: &FormalSum) -> Result<FormalSum> {
    let sig = Signature::plain(Space::B);
    d1.same_signature(&FormalSum::zero(sig))?;
    d2.same_signature(&FormalSum::zero(sig))?;
    let mut out = FormalSum::zero(sig);
    for (a, ca) in d1.sorted() {
        for (b, cb) in d2.sorted() {
            let c = ca * cb;
            for e in operate_raw(a, b)? {
                out.add_raw(&e, &c);
            }
        }
    }
    Ok(out)
}
