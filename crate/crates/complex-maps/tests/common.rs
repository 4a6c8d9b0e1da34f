#![allow(dead_code)]

use diagram_core::{FormalSum, Signature};
use relations_engine::{enumerate_slice, with_shared, SliceKey};

pub fn slice(sig: Signature, w: usize, discs: usize) -> Vec<FormalSum> {
    let key = SliceKey::weight(sig, w).with_discs(discs);
    enumerate_slice(&key)
        .unwrap()
        .diagrams
        .iter()
        .map(|d| FormalSum::from_diagram(d, sig))
        .collect()
}

pub fn zero_in_quotient(s: &FormalSum) -> bool {
    s.is_zero() || with_shared(|q| q.is_zero(s, s.max_weight().max(1))).unwrap()
}

pub fn equal_in_quotient(a: &FormalSum, b: &FormalSum) -> bool {
    zero_in_quotient(&a.minus(b))
}
