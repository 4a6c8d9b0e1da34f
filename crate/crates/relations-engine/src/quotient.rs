//! Equality in quotient spaces by exact span membership.
//!
//! Spaces with only IHX relations use a per-component normal form: each
//! connected component is reduced against the IHX closure of its own
//! isomorphism class, and the reduced components are reassembled. Spaces
//! with leg relations (STU, Clifford) use a global closure under all rows,
//! bounded by weight, grown incrementally across queries.

use crate::elim::{integerize, Echelon};
use crate::enumerate::{enumerate_slice, SliceBasis, SliceKey};
use crate::error::{RelError, Result};
use crate::rows::{all_rows, ihx_rows, upward_sources, Row};
use diagram_core::{canonicalize, Coeff, Diagram, End, FormalSum, Leg, Signature};
use num_traits::{One, Zero};
use std::cell::RefCell;
use std::collections::{HashMap, VecDeque};
use std::rc::Rc;

/// Default cap on the number of diagrams in one global closure.
pub const DEFAULT_CLOSURE_CAP: usize = 400_000;

type Nf = Rc<Vec<(Diagram, Coeff)>>;

struct Closure {
    index: HashMap<Diagram, usize>,
    diagrams: Vec<Diagram>,
    next: usize,
    ech: Echelon,
}

impl Closure {
    fn new() -> Self {
        Closure {
            index: HashMap::new(),
            diagrams: Vec::new(),
            next: 0,
            ech: Echelon::new(),
        }
    }

    fn col(&mut self, d: &Diagram) -> usize {
        if let Some(&i) = self.index.get(d) {
            return i;
        }
        let i = self.diagrams.len();
        self.diagrams.push(d.clone());
        self.index.insert(d.clone(), i);
        i
    }

    fn add_row(&mut self, row: &Row) {
        let v: Vec<(usize, Coeff)> = row.iter().map(|(d, c)| (self.col(d), c.clone())).collect();
        self.ech.insert(integerize(&v));
    }

    fn expand(&mut self, sig: Signature, max_weight: usize, cap: usize) -> Result<()> {
        while self.next < self.diagrams.len() {
            let d = self.diagrams[self.next].clone();
            self.next += 1;
            for row in all_rows(&d, sig) {
                self.add_row(&row);
            }
            for x in upward_sources(&d, sig, max_weight) {
                if let Some((c, _)) = canonicalize(&x, sig) {
                    self.col(&c);
                }
            }
            if self.diagrams.len() > cap {
                return Err(RelError::TooLarge(format!(
                    "relation closure in {sig} exceeds {cap} diagrams"
                )));
            }
        }
        Ok(())
    }
}

/// Cached quotient decisions across queries.
pub struct Quotient {
    comp: HashMap<(Signature, Diagram), Nf>,
    global: HashMap<(Signature, usize), Closure>,
    /// Cap on global closure size.
    pub cap: usize,
}

impl Default for Quotient {
    fn default() -> Self {
        Self::new()
    }
}

fn koszul_sign(legs: &[Leg], order: &[usize]) -> i32 {
    let mut odd = 0usize;
    for i in 0..order.len() {
        if legs[order[i]].grade() % 2 == 0 {
            continue;
        }
        for j in i + 1..order.len() {
            if order[j] < order[i] && legs[order[j]].grade() % 2 == 1 {
                odd += 1;
            }
        }
    }
    if odd % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Reorders legs as fixed legs first then free legs, each in original order.
fn fixed_first(d: &Diagram, sig: Signature) -> (Diagram, i32) {
    let mut order: Vec<usize> = (0..d.nlegs()).filter(|&i| sig.leg_class(d.legs[i]).fixed).collect();
    order.extend((0..d.nlegs()).filter(|&i| !sig.leg_class(d.legs[i]).fixed));
    (d.permute_legs(&order), koszul_sign(&d.legs, &order))
}

fn has_internal_edge(d: &Diagram) -> bool {
    (0..d.nverts as usize).any(|v| {
        (0..3).any(|k| matches!(d.end(d.partner[d.slot(v, k) as usize]), End::Vertex(w, _) if w != v))
    })
}

/// Whether the signature has only IHX relations (besides AS and leg symmetry).
pub fn ihx_only(sig: Signature) -> bool {
    !sig.has_stu() && !sig.has_clifford()
}

impl Quotient {
    /// Empty caches.
    pub fn new() -> Self {
        Quotient {
            comp: HashMap::new(),
            global: HashMap::new(),
            cap: DEFAULT_CLOSURE_CAP,
        }
    }

    fn component_nf(&mut self, c: &Diagram, sig: Signature) -> Nf {
        if let Some(nf) = self.comp.get(&(sig, c.clone())) {
            return nf.clone();
        }
        let mut seen: HashMap<Diagram, ()> = HashMap::new();
        let mut queue = VecDeque::from([c.clone()]);
        seen.insert(c.clone(), ());
        let mut rows = Vec::new();
        while let Some(d) = queue.pop_front() {
            for row in ihx_rows(&d, sig) {
                for (x, _) in &row {
                    if !seen.contains_key(x) {
                        seen.insert(x.clone(), ());
                        queue.push_back(x.clone());
                    }
                }
                rows.push(row);
            }
        }
        let mut members: Vec<Diagram> = seen.into_keys().collect();
        members.sort();
        let index: HashMap<&Diagram, usize> = members.iter().enumerate().map(|(i, d)| (d, i)).collect();
        let mut ech = Echelon::new();
        for row in &rows {
            let v: Vec<(usize, Coeff)> = row.iter().map(|(d, k)| (index[d], k.clone())).collect();
            ech.insert(integerize(&v));
        }
        for (i, m) in members.iter().enumerate() {
            let nf = ech.normal_form_rational(&[(i, Coeff::one())]);
            let nf: Vec<(Diagram, Coeff)> = nf.into_iter().map(|(j, k)| (members[j].clone(), k)).collect();
            self.comp.insert((sig, m.clone()), Rc::new(nf));
        }
        self.comp[&(sig, c.clone())].clone()
    }

    /// Adds `coeff` times the normal form of a canonical generator.
    fn add_nf(&mut self, d: &Diagram, coeff: &Coeff, out: &mut FormalSum) {
        let sig = out.signature();
        if !has_internal_edge(d) {
            out.add_canonical(d.clone(), coeff);
            return;
        }
        let (d1, s1) = fixed_first(d, sig);
        let n = d1.nlegs();
        let comps = d1.components();
        // group free legs by component
        let comp_of_leg: Vec<usize> = {
            let mut v = vec![0usize; n];
            for (ci, nodes) in comps.iter().enumerate() {
                for &x in nodes {
                    if x < n {
                        v[x] = ci;
                    }
                }
            }
            v
        };
        let nfixed = (0..n).filter(|&i| sig.leg_class(d1.legs[i]).fixed).count();
        let mut order: Vec<usize> = (0..nfixed).collect();
        let mut free: Vec<usize> = (nfixed..n).collect();
        free.sort_by_key(|&i| (comp_of_leg[i], i));
        order.extend(free);
        let s2 = koszul_sign(&d1.legs, &order);
        let d2 = d1.permute_legs(&order);
        let comps = d2.components();
        let mut factors: Vec<(Vec<usize>, Vec<usize>, Nf, i32)> = Vec::new();
        for nodes in &comps {
            let sub = d2.subdiagram(nodes);
            let csig = Signature {
                space: sig.space,
                iota: sub.iota,
            };
            let Some((c, sc)) = canonicalize(&sub, csig) else { return };
            let legs: Vec<usize> = nodes.iter().copied().filter(|&x| x < n).collect();
            let fixed_pos: Vec<usize> = legs.iter().copied().filter(|&x| x < nfixed).collect();
            let free_pos: Vec<usize> = legs.iter().copied().filter(|&x| x >= nfixed).collect();
            let nf = self.component_nf(&c, csig);
            factors.push((fixed_pos, free_pos, nf, sc));
        }
        let base_sign = s1 * s2 * factors.iter().map(|f| f.3).product::<i32>();
        let base = if base_sign < 0 { -coeff.clone() } else { coeff.clone() };
        let mut pick = vec![0usize; factors.len()];
        if factors.iter().any(|f| f.2.is_empty()) {
            return;
        }
        loop {
            let mut k = base.clone();
            let mut pieces: Vec<(Diagram, Vec<usize>)> = Vec::new();
            for (fi, f) in factors.iter().enumerate() {
                let (t, c) = &f.2[pick[fi]];
                let (t2, st) = fixed_first(t, sig);
                k *= c;
                if st < 0 {
                    k = -k;
                }
                let mut pos = f.0.clone();
                pos.extend_from_slice(&f.1);
                pieces.push((t2, pos));
            }
            let x = assemble(n, d, &pieces);
            out.add_raw(&x, &k);
            let mut i = 0;
            loop {
                if i == pick.len() {
                    return;
                }
                pick[i] += 1;
                if pick[i] < factors[i].2.len() {
                    break;
                }
                pick[i] = 0;
                i += 1;
            }
            if pick.is_empty() {
                return;
            }
        }
    }

    /// Normal form of a sum in an IHX-only space; equal classes give equal sums.
    pub fn normal_form(&mut self, s: &FormalSum) -> Result<FormalSum> {
        let sig = s.signature();
        if !ihx_only(sig) {
            return Err(RelError::Unsupported {
                op: "normal_form",
                sig: sig.name(),
            });
        }
        let mut out = FormalSum::zero(sig);
        for (d, c) in s.sorted() {
            self.add_nf(d, c, &mut out);
        }
        Ok(out)
    }

    /// Whether a sum is zero in the quotient, using relations up to `max_weight`.
    pub fn is_zero(&mut self, s: &FormalSum, max_weight: usize) -> Result<bool> {
        let sig = s.signature();
        if s.is_zero() {
            return Ok(true);
        }
        if let Some((d, _)) = s.iter().find(|(d, _)| d.weight() > max_weight) {
            return Err(RelError::OutsideSlice(format!(
                "term of weight {} above bound {max_weight}",
                d.weight()
            )));
        }
        if ihx_only(sig) {
            return Ok(self.normal_form(s)?.is_zero());
        }
        let cap = self.cap;
        let cl = self.global.entry((sig, max_weight)).or_insert_with(Closure::new);
        let terms = s.sorted();
        for (d, _) in &terms {
            cl.col(d);
        }
        cl.expand(sig, max_weight, cap)?;
        let v: Vec<(usize, Coeff)> = terms.iter().map(|(d, c)| (cl.index[*d], (*c).clone())).collect();
        Ok(cl.ech.contains(integerize(&v)))
    }

    /// Reduces several sums of one signature modulo relations up to
    /// `max_weight`. Sums equal in the quotient reduce to equal sums, and the
    /// reduction is linear across the batch.
    pub fn reduce_many(&mut self, sums: &[FormalSum], max_weight: usize) -> Result<Vec<FormalSum>> {
        let Some(first) = sums.first() else { return Ok(Vec::new()) };
        let sig = first.signature();
        for s in sums {
            first.same_signature(s)?;
            if let Some((d, _)) = s.iter().find(|(d, _)| d.weight() > max_weight) {
                return Err(RelError::OutsideSlice(format!(
                    "term of weight {} above bound {max_weight}",
                    d.weight()
                )));
            }
        }
        if ihx_only(sig) {
            return sums.iter().map(|s| self.normal_form(s)).collect();
        }
        let cap = self.cap;
        let cl = self.global.entry((sig, max_weight)).or_insert_with(Closure::new);
        for s in sums {
            for (d, _) in s.iter() {
                cl.col(d);
            }
        }
        cl.expand(sig, max_weight, cap)?;
        Ok(sums
            .iter()
            .map(|s| {
                let v: Vec<(usize, Coeff)> = s.sorted().into_iter().map(|(d, c)| (cl.index[d], c.clone())).collect();
                let mut out = FormalSum::zero(sig);
                for (j, k) in cl.ech.normal_form_rational(&v) {
                    out.add_canonical(cl.diagrams[j].clone(), &k);
                }
                out
            })
            .collect())
    }

    /// Whether two sums agree in the quotient.
    pub fn equal(&mut self, a: &FormalSum, b: &FormalSum, max_weight: usize) -> Result<bool> {
        a.same_signature(b)?;
        self.is_zero(&a.minus(b), max_weight)
    }
}

/// Places component pieces at leg positions, keeping `host`'s ι, discs and loops.
fn assemble(n: usize, host: &Diagram, pieces: &[(Diagram, Vec<usize>)]) -> Diagram {
    let iota = host.iota;
    let base = n as u32 + iota as u32;
    let nverts: u32 = pieces.iter().map(|p| p.0.nverts).sum();
    let mut partner = vec![0u32; (base + 3 * nverts) as usize];
    let mut legs = vec![Leg::G1; n];
    let mut voff = 0u32;
    for (t, pos) in pieces {
        let map = |h: u32| -> u32 {
            match t.end(h) {
                End::Leg(j) => pos[j] as u32,
                End::Iota => n as u32,
                End::Vertex(v, k) => base + 3 * (voff + v as u32) + k as u32,
            }
        };
        for (h, &p) in t.partner.iter().enumerate() {
            partner[map(h as u32) as usize] = map(p);
        }
        for (j, l) in t.legs.iter().enumerate() {
            legs[pos[j]] = *l;
        }
        voff += t.nverts;
    }
    Diagram {
        legs,
        iota,
        nverts,
        partner,
        filled: host.filled,
        open: host.open,
        loops: host.loops,
    }
}

thread_local! {
    static SHARED: RefCell<Quotient> = RefCell::new(Quotient::new());
}

/// Runs a closure against the thread's shared quotient cache.
pub fn with_shared<R>(f: impl FnOnce(&mut Quotient) -> R) -> R {
    SHARED.with(|q| f(&mut q.borrow_mut()))
}

/// Decides `a = b` in the quotient; errors if `a − b` leaves the slice.
pub fn quotient_equal(a: &FormalSum, b: &FormalSum, key: &SliceKey) -> Result<bool> {
    a.same_signature(b)?;
    if a.signature() != key.sig {
        return Err(RelError::Invalid(format!(
            "sum in {} but slice in {}",
            a.signature(),
            key.sig
        )));
    }
    let diff = a.minus(b);
    for (d, _) in diff.iter() {
        if !key.contains(d) {
            return Err(RelError::OutsideSlice(diagram_core::serialize_diagram(d)));
        }
    }
    with_shared(|q| q.is_zero(&diff, key.max_weight))
}

/// Sparse relation rows over a slice basis.
#[derive(Clone, Debug)]
pub struct RelationMatrix {
    /// One row per relation instance whose support lies in the basis.
    pub rows: Vec<Vec<(usize, Coeff)>>,
    reduced: Echelon,
}

impl RelationMatrix {
    /// Rank of the relation subspace inside the span of the basis.
    pub fn rank(&self) -> usize {
        self.reduced.rank()
    }

    /// Whether a vector over the basis is a relation.
    pub fn contains(&self, v: &[(usize, Coeff)]) -> bool {
        self.reduced.contains(integerize(v))
    }
}

/// Relation rows of a slice.
///
/// `rows` lists the instances supported inside the basis. The reduced form
/// spans every relation lying in the span of the basis, including
/// combinations of instances that pass through generators outside the slice
/// (same weight bound). Errors only if the closure exceeds its cap.
pub fn relation_vectors(basis: &SliceBasis) -> Result<RelationMatrix> {
    let sig = basis.key.sig;
    let mw = basis.key.max_weight;
    let mut rows = Vec::new();
    let mut cl = Closure::new();
    for d in &basis.diagrams {
        cl.col(d);
    }
    for d in &basis.diagrams {
        'row: for row in all_rows(d, sig) {
            let mut v = Vec::with_capacity(row.len());
            for (x, c) in &row {
                match basis.index.get(x) {
                    Some(&i) => v.push((i, c.clone())),
                    None => continue 'row,
                }
            }
            v.sort_by_key(|e| e.0);
            rows.push(v);
        }
    }
    cl.expand(sig, mw, DEFAULT_CLOSURE_CAP)?;
    // basis columns come first, so pivots below |basis| span the intersection
    let n = basis.len();
    let mut reduced = Echelon::new();
    for v in cl.ech.rows_with_pivot_below(n) {
        reduced.insert(v);
    }
    Ok(RelationMatrix { rows, reduced })
}

/// Dimension of the quotient slice: basis size minus relation rank.
pub fn slice_rank(key: &SliceKey) -> Result<usize> {
    let basis = enumerate_slice(key)?;
    let m = relation_vectors(&basis)?;
    Ok(basis.len() - m.rank())
}

/// Expresses a sum over a basis; errors on support outside it.
pub fn to_vector(s: &FormalSum, basis: &SliceBasis) -> Result<Vec<(usize, Coeff)>> {
    let mut v = Vec::with_capacity(s.len());
    for (d, c) in s.sorted() {
        match basis.index.get(d) {
            Some(&i) if !c.is_zero() => v.push((i, c.clone())),
            Some(_) => {}
            None => return Err(RelError::OutsideSlice(diagram_core::serialize_diagram(d))),
        }
    }
    v.sort_by_key(|e| e.0);
    Ok(v)
}
