//! Enumeration of all canonical generators in a bounded slice.

use crate::error::{RelError, Result};
use diagram_core::{canonicalize, Diagram, Flavor, Leg, Line, Signature};
use std::collections::{HashMap, HashSet};

/// Constraint on the leg word of a slice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LegWord {
    /// Exactly this ordered word (up to the signature's leg freedom).
    Exact(Vec<Leg>),
    /// Any ordering of this multiset.
    Multiset(Vec<Leg>),
    /// Any admissible word.
    Any,
}

/// Bounds describing a finite slice of a diagram space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceKey {
    /// Signature of the slice.
    pub sig: Signature,
    /// Leg word constraint.
    pub legs: LegWord,
    /// Maximum number of legs.
    pub max_legs: usize,
    /// Maximum number of trivalent vertices.
    pub max_trivalent: usize,
    /// Maximum number of closed loops.
    pub max_loops: usize,
    /// Maximum weight (legs + trivalent + 2·loops).
    pub max_weight: usize,
    /// Maximum number of disc letters.
    pub max_discs: usize,
}

impl SliceKey {
    /// All generators of weight at most `w`, no discs.
    pub fn weight(sig: Signature, w: usize) -> Self {
        SliceKey {
            sig,
            legs: LegWord::Any,
            max_legs: w,
            max_trivalent: w,
            max_loops: if sig.allows_loops() { w / 2 } else { 0 },
            max_weight: w,
            max_discs: 0,
        }
    }

    /// Generators with an exact leg word and bounded trivalent count.
    pub fn exact(sig: Signature, legs: Vec<Leg>, max_trivalent: usize) -> Self {
        let n = legs.len();
        SliceKey {
            sig,
            legs: LegWord::Exact(legs),
            max_legs: n,
            max_trivalent,
            max_loops: 0,
            max_weight: n + max_trivalent,
            max_discs: 0,
        }
    }

    /// Sets the leg-count bound.
    pub fn with_max_legs(mut self, n: usize) -> Self {
        self.max_legs = n;
        self
    }

    /// Sets the disc bound.
    pub fn with_discs(mut self, n: usize) -> Self {
        self.max_discs = n;
        self
    }

    /// Sets the loop bound.
    pub fn with_loops(mut self, n: usize) -> Self {
        self.max_loops = n;
        self
    }

    /// Whether a canonical generator satisfies the key.
    pub fn contains(&self, d: &Diagram) -> bool {
        if d.iota != self.sig.iota
            || d.nlegs() > self.max_legs
            || d.nverts as usize > self.max_trivalent
            || d.loops as usize > self.max_loops
            || d.weight() > self.max_weight
            || (d.filled + d.open) as usize > self.max_discs
        {
            return false;
        }
        let mut legs = d.legs.clone();
        match &self.legs {
            LegWord::Any => true,
            LegWord::Exact(w) | LegWord::Multiset(w) => {
                let mut w = w.clone();
                w.sort();
                legs.sort();
                legs == w
            }
        }
    }
}

/// Canonical generators of a slice in deterministic order.
#[derive(Clone, Debug)]
pub struct SliceBasis {
    /// The key that produced the basis.
    pub key: SliceKey,
    /// Generators sorted by canonical order.
    pub diagrams: Vec<Diagram>,
    /// Position of each generator.
    pub index: HashMap<Diagram, usize>,
}

impl SliceBasis {
    /// Number of generators.
    pub fn len(&self) -> usize {
        self.diagrams.len()
    }

    /// Whether the basis is empty.
    pub fn is_empty(&self) -> bool {
        self.diagrams.is_empty()
    }
}

/// Default cap on raw matchings generated per slice.
pub const DEFAULT_CAP: usize = 5_000_000;

fn alphabet(sig: Signature) -> Vec<Leg> {
    let lines: &[Line] = if sig.uses_lines() { &[Line::Nc, Line::C] } else { &[Line::None] };
    let mut out = Vec::new();
    for f in [Flavor::Fat, Flavor::F, Flavor::G1] {
        if sig.allows_flavor(f) {
            for &l in lines {
                out.push(Leg::on(f, l));
            }
        }
    }
    out
}

fn all_free(sig: Signature) -> bool {
    alphabet(sig).iter().all(|&l| !sig.leg_class(l).fixed)
}

fn words(key: &SliceKey) -> Vec<Vec<Leg>> {
    let sig = key.sig;
    match &key.legs {
        LegWord::Exact(w) => vec![w.clone()],
        LegWord::Multiset(w) => {
            let mut w = w.clone();
            w.sort();
            let mut out = vec![w.clone()];
            if !all_free(sig) {
                while next_permutation(&mut w) {
                    out.push(w.clone());
                }
            }
            out
        }
        LegWord::Any => {
            let alpha = alphabet(sig);
            let free = all_free(sig);
            let mut out = Vec::new();
            for n in 0..=key.max_legs.min(key.max_weight) {
                let mut idx = vec![0usize; n];
                loop {
                    if !free || idx.windows(2).all(|p| p[0] <= p[1]) {
                        out.push(idx.iter().map(|&i| alpha[i]).collect());
                    }
                    let mut k = n;
                    loop {
                        if k == 0 {
                            break;
                        }
                        k -= 1;
                        idx[k] += 1;
                        if idx[k] < alpha.len() {
                            break;
                        }
                        idx[k] = 0;
                        if k == 0 {
                            k = usize::MAX;
                            break;
                        }
                    }
                    if k == usize::MAX || n == 0 {
                        break;
                    }
                }
            }
            out
        }
    }
}

fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

struct Matcher<'a> {
    base: usize,
    nverts: usize,
    partner: Vec<u32>,
    used: Vec<u8>,
    emit: &'a mut dyn FnMut(&[u32]) -> bool,
    count: usize,
    cap: usize,
    overflow: bool,
}

impl Matcher<'_> {
    fn vertex_of(&self, h: usize) -> Option<usize> {
        (h >= self.base).then(|| (h - self.base) / 3)
    }

    fn set(&mut self, a: usize, b: usize, on: bool) {
        let val = if on { 1i8 } else { -1 };
        for h in [a, b] {
            if let Some(v) = self.vertex_of(h) {
                self.used[v] = (self.used[v] as i8 + val) as u8;
            }
        }
        if on {
            self.partner[a] = b as u32;
            self.partner[b] = a as u32;
        } else {
            self.partner[a] = u32::MAX;
            self.partner[b] = u32::MAX;
        }
    }

    fn run(&mut self) {
        if self.overflow {
            return;
        }
        let Some(h) = self.partner.iter().position(|&p| p == u32::MAX) else {
            self.count += 1;
            if self.count > self.cap {
                self.overflow = true;
                return;
            }
            let p = self.partner.clone();
            if !(self.emit)(&p) {
                self.overflow = true;
            }
            return;
        };
        let hv = self.vertex_of(h);
        let mut fresh_taken = false;
        for p in h + 1..self.partner.len() {
            if self.partner[p] != u32::MAX {
                continue;
            }
            let pv = self.vertex_of(p);
            if let Some(v) = pv {
                if Some(v) == hv {
                    continue;
                }
                let s = (p - self.base) % 3;
                match self.used[v] {
                    0 => {
                        if fresh_taken || s != 0 {
                            continue;
                        }
                        fresh_taken = true;
                    }
                    1 => {
                        // the two free slots are exchangeable; take the first
                        let first = (0..3).find(|&k| self.partner[self.base + 3 * v + k] == u32::MAX).unwrap();
                        if s != first {
                            continue;
                        }
                    }
                    _ => {}
                }
            }
            self.set(h, p, true);
            self.run();
            self.set(h, p, false);
            if self.overflow {
                return;
            }
        }
        let _ = self.nverts;
    }
}

/// Enumerates the canonical nonzero generators of a slice.
pub fn enumerate_slice(key: &SliceKey) -> Result<SliceBasis> {
    enumerate_slice_capped(key, DEFAULT_CAP)
}

/// Enumeration with an explicit cap on raw matchings.
pub fn enumerate_slice_capped(key: &SliceKey, cap: usize) -> Result<SliceBasis> {
    let sig = key.sig;
    for w in words(key) {
        for l in &w {
            if !sig.admits_leg(*l) {
                return Err(RelError::Invalid(format!("leg {l} not admissible in {sig}")));
            }
        }
    }
    let mut found: HashSet<Diagram> = HashSet::new();
    let mut total = 0usize;
    for w in words(key) {
        let n = w.len();
        if n > key.max_legs || n > key.max_weight {
            continue;
        }
        for nv in 0..=key.max_trivalent {
            if n + nv > key.max_weight {
                break;
            }
            let half = n + sig.iota as usize + 3 * nv;
            if half % 2 == 1 {
                continue;
            }
            let template = Diagram {
                legs: w.clone(),
                iota: sig.iota,
                nverts: nv as u32,
                partner: vec![u32::MAX; half],
                filled: 0,
                open: 0,
                loops: 0,
            };
            let mut emit = |p: &[u32]| -> bool {
                let mut d = template.clone();
                d.partner = p.to_vec();
                if let Some((c, _)) = canonicalize(&d, sig) {
                    found.insert(c);
                }
                true
            };
            let mut m = Matcher {
                base: n + sig.iota as usize,
                nverts: nv,
                partner: vec![u32::MAX; half],
                used: vec![0; nv],
                emit: &mut emit,
                count: 0,
                cap: cap.saturating_sub(total),
                overflow: false,
            };
            m.run();
            total += m.count;
            if m.overflow {
                return Err(RelError::TooLarge(format!("slice exceeds {cap} raw matchings")));
            }
        }
    }
    let mut all: Vec<Diagram> = Vec::new();
    let max_loops = if sig.allows_loops() { key.max_loops } else { 0 };
    let disc_options: Vec<(u32, u32)> = if sig.allows_discs() {
        let mut v = Vec::new();
        for filled in 0..=1u32 {
            for open in 0..=key.max_discs as u32 {
                if (filled + open) as usize <= key.max_discs {
                    v.push((filled, open));
                }
            }
        }
        v
    } else {
        vec![(0, 0)]
    };
    for d in found {
        for loops in 0..=max_loops as u32 {
            if d.weight() + 2 * loops as usize > key.max_weight {
                break;
            }
            for &(filled, open) in &disc_options {
                let mut e = d.clone();
                e.loops = loops;
                e.filled = filled;
                e.open = open;
                if let Some((c, _)) = canonicalize(&e, sig) {
                    if key.contains(&c) {
                        all.push(c);
                    }
                }
            }
        }
    }
    all.sort();
    all.dedup();
    let index = all.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect();
    Ok(SliceBasis {
        key: key.clone(),
        diagrams: all,
        index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use diagram_core::Space;

    #[test]
    fn weight_zero_is_empty_diagram() {
        let b = enumerate_slice(&SliceKey::weight(Signature::plain(Space::W), 0)).unwrap();
        assert_eq!(b.diagrams, vec![Diagram::empty()]);
    }

    #[test]
    fn two_fat_legs_one_chord() {
        let key = SliceKey::exact(Signature::plain(Space::WTilde), vec![Leg::FAT, Leg::FAT], 0);
        let b = enumerate_slice(&key).unwrap();
        assert_eq!(b.len(), 1);
    }

    #[test]
    fn b_contains_two_wheel() {
        let key = SliceKey::exact(Signature::plain(Space::B), vec![Leg::FAT, Leg::FAT], 2);
        let b = enumerate_slice(&key).unwrap();
        let (w2, _) = canonicalize(&Diagram::wheel(2, Leg::FAT), key.sig).unwrap();
        assert!(b.index.contains_key(&w2));
    }

    #[test]
    fn permutations() {
        let mut v = vec![1, 1, 2];
        let mut n = 1;
        while next_permutation(&mut v) {
            n += 1;
        }
        assert_eq!(n, 3);
    }
}
