//! Fraction-free sparse Gaussian elimination with content reduction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;

/// Sparse integer vector, entries sorted by ascending column.
pub type SparseVec = Vec<(usize, BigInt)>;

/// Clears denominators and removes the content of a rational vector.
pub fn integerize(v: &[(usize, BigRational)]) -> SparseVec {
    let mut l = BigInt::one();
    for (_, c) in v {
        l = l.lcm(c.denom());
    }
    let mut out: SparseVec = v
        .iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (*i, c.numer() * (&l / c.denom())))
        .collect();
    out.sort_by_key(|e| e.0);
    normalize(&mut out);
    out
}

fn normalize(v: &mut SparseVec) {
    let mut g = BigInt::zero();
    for (_, c) in v.iter() {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    if g.is_zero() {
        return;
    }
    if v.last().is_some_and(|(_, c)| c.is_negative()) {
        g = -g;
    }
    if !g.is_one() {
        for (_, c) in v.iter_mut() {
            *c = &*c / &g;
        }
    }
}

/// `a·x − b·y` on sparse vectors.
fn combine(x: &SparseVec, a: &BigInt, y: &SparseVec, b: &BigInt) -> SparseVec {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let ci = x.get(i).map(|e| e.0);
        let cj = y.get(j).map(|e| e.0);
        match (ci, cj) {
            (Some(p), Some(r)) if p == r => {
                let v = a * &x[i].1 - b * &y[j].1;
                if !v.is_zero() {
                    out.push((p, v));
                }
                i += 1;
                j += 1;
            }
            (Some(p), Some(r)) if p < r => {
                out.push((p, a * &x[i].1));
                i += 1;
            }
            (Some(p), None) => {
                out.push((p, a * &x[i].1));
                i += 1;
            }
            (_, Some(r)) => {
                out.push((r, -(b * &y[j].1)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Row-echelon basis keyed by leading (largest) column.
#[derive(Default, Clone, Debug)]
pub struct Echelon {
    rows: HashMap<usize, SparseVec>,
}

impl Echelon {
    /// Empty basis.
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of pivots.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Whether a column is a pivot column.
    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    /// Eliminates leading terms until the leading column is not a pivot.
    fn reduce_leading(&self, mut v: SparseVec) -> SparseVec {
        while let Some((c, lead)) = v.last().cloned() {
            match self.rows.get(&c) {
                Some(r) => {
                    let p = &r.last().unwrap().1;
                    let g = p.gcd(&lead);
                    v = combine(&v, &(p / &g), r, &(&lead / &g));
                    normalize(&mut v);
                }
                None => break,
            }
        }
        v
    }

    /// Adds a row; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let v = self.reduce_leading(v);
        match v.last() {
            Some(&(c, _)) => {
                self.rows.insert(c, v);
                true
            }
            None => false,
        }
    }

    /// Whether a vector lies in the row span.
    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce_leading(v).is_empty()
    }

    /// Rows whose leading column is below `n`.
    pub fn rows_with_pivot_below(&self, n: usize) -> Vec<SparseVec> {
        let mut keys: Vec<usize> = self.rows.keys().copied().filter(|&c| c < n).collect();
        keys.sort_unstable();
        keys.into_iter().map(|c| self.rows[&c].clone()).collect()
    }

    /// Reduces every pivot column out of a rational vector; unique per row space.
    pub fn normal_form_rational(&self, v: &[(usize, BigRational)]) -> Vec<(usize, BigRational)> {
        let mut cur: Vec<(usize, BigRational)> = v.iter().filter(|e| !e.1.is_zero()).cloned().collect();
        cur.sort_by_key(|e| e.0);
        let mut out: Vec<(usize, BigRational)> = Vec::new();
        while let Some((c, lead)) = cur.last().cloned() {
            match self.rows.get(&c) {
                Some(r) => {
                    let p = BigRational::from_integer(r.last().unwrap().1.clone());
                    let f = &lead / &p;
                    let mut next: Vec<(usize, BigRational)> = Vec::with_capacity(cur.len() + r.len());
                    let (mut i, mut j) = (0, 0);
                    while i < cur.len() || j < r.len() {
                        let ci = cur.get(i).map(|e| e.0);
                        let cj = r.get(j).map(|e| e.0);
                        match (ci, cj) {
                            (Some(a), Some(b)) if a == b => {
                                let val = &cur[i].1 - &f * BigRational::from_integer(r[j].1.clone());
                                if !val.is_zero() {
                                    next.push((a, val));
                                }
                                i += 1;
                                j += 1;
                            }
                            (Some(a), Some(b)) if a < b => {
                                next.push(cur[i].clone());
                                i += 1;
                            }
                            (Some(_), None) => {
                                next.push(cur[i].clone());
                                i += 1;
                            }
                            (_, Some(b)) => {
                                next.push((b, -(&f * BigRational::from_integer(r[j].1.clone()))));
                                j += 1;
                            }
                            (None, None) => unreachable!(),
                        }
                    }
                    cur = next;
                }
                None => out.push(cur.pop().unwrap()),
            }
        }
        out.reverse();
        out
    }
}
