mod common;

use common::{equal_in_quotient, slice};
use complex_maps::*;
use diagram_core::{q, Diagram, End::Leg as L, FormalSum, Leg, Signature, Space};
use relations_engine::{build, leg_rows, with_shared};

fn chords(n: usize) -> Diagram {
    // n grade-1 legs, each on a chord to its own F-leg
    let mut legs = vec![Leg::G1; n];
    legs.extend(vec![Leg::F; n]);
    let edges: Vec<_> = (0..n).map(|i| (L(i), L(n + i))).collect();
    build(legs, false, 0, &edges, 0)
}

#[test]
fn pairing_counts() {
    assert_eq!(pairings(&chords(0)).len(), 1);
    assert_eq!(pairings(&chords(1)).len(), 1);
    assert_eq!(pairings(&chords(4)).len(), 10);
    let d = chords(4);
    let out = lambda(&FormalSum::from_diagram(&d, Signature::plain(Space::WHatF))).unwrap();
    assert_eq!(out.len(), 10);
    let halves = out.iter().filter(|(_, c)| **c == q(1, 2) || **c == q(-1, 2)).count();
    let quarters = out.iter().filter(|(_, c)| **c == q(1, 4) || **c == q(-1, 4)).count();
    assert_eq!((halves, quarters), (6, 3));
}

#[test]
fn lambda_without_pairs_is_relabeling() {
    let d = chords(1);
    let out = lambda(&FormalSum::from_diagram(&d, Signature::plain(Space::WHatF))).unwrap();
    assert_eq!(out, FormalSum::from_diagram(&d, Signature::plain(Space::WWedge)));
}

#[test]
fn linked_pairing_example() {
    // grade-1 legs 1..4 in a row; pairs {1,3} and {2,4} are linked
    let d = chords(4);
    let p = Pairing::new(&[(1, 3), (0, 2)], &d).unwrap();
    let (c, _) = pairing_action_raw(&p, &d).unwrap();
    assert_eq!(c, q(-1, 4));
    let a = pairing_action(&p, &d).unwrap();
    let b = pairing_action(&Pairing::new(&[(0, 2), (1, 3)], &d).unwrap(), &d).unwrap();
    assert_eq!(a, b);
    let single = Pairing::new(&[(1, 3)], &d).unwrap();
    assert_eq!(pairing_action_raw(&single, &d).unwrap().0, q(-1, 2));
    assert!(Pairing::new(&[(0, 4)], &d).is_err());
    assert!(Pairing::new(&[(0, 1), (1, 2)], &d).is_err());
}

#[test]
fn pair_order_is_irrelevant() {
    for x in slice(Signature::plain(Space::WHatF), 6, 0) {
        let d = x.iter().next().unwrap().0;
        for p in pairings(d) {
            let mut r = p.clone();
            r.pairs.reverse();
            assert_eq!(pairing_action(&p, d).unwrap(), pairing_action(&r, d).unwrap());
        }
    }
}

#[test]
fn lambda_kills_relation_rows() {
    let sig = Signature::plain(Space::WHatF);
    let mut clifford = 0;
    for x in slice(sig, 6, 0) {
        let d = x.iter().next().unwrap().0;
        for row in leg_rows(d, sig) {
            let mut s = FormalSum::zero(sig);
            for (e, c) in &row {
                s.add_canonical(e.clone(), c);
            }
            if row.iter().any(|(e, _)| e.nlegs() + 2 == d.nlegs()) {
                clifford += 1;
            }
            let l = lambda(&s).unwrap();
            let w = l.max_weight().max(1);
            assert!(with_shared(|qt| qt.is_zero(&l, w)).unwrap(), "{s}");
        }
    }
    assert!(clifford > 0);
}

#[test]
fn lambda_and_chi_wedge_are_inverse() {
    for x in slice(Signature::plain(Space::WWedge), 6, 0) {
        let back = lambda(&chi_wedge(&x).unwrap()).unwrap();
        assert!(equal_in_quotient(&back, &x), "{x}");
    }
    for x in slice(Signature::plain(Space::WHatF), 6, 0) {
        let back = chi_wedge(&lambda(&x).unwrap()).unwrap();
        assert!(equal_in_quotient(&back, &x), "{x}");
        assert!(hat_equal(&back, &x, 6).unwrap(), "{x}");
    }
}

#[test]
fn chi_wedge_example() {
    let d = chords(3);
    let x = FormalSum::from_diagram(&d, Signature::plain(Space::WWedge));
    let out = chi_wedge(&x).unwrap();
    assert_eq!(out.len(), 6);
    assert!(out.iter().all(|(_, c)| *c == q(1, 6) || *c == q(-1, 6)));
    let plain = FormalSum::from_diagram(&chords(0), Signature::plain(Space::WWedge));
    assert_eq!(chi_wedge(&plain).unwrap(), plain.reinterpret(Signature::plain(Space::WHatF)));
}

#[test]
fn chi_wedge_commutes_with_iota() {
    let i_w = diff_operators::builtin("iota_wedge", Space::WWedge).unwrap();
    let i_f = diff_operators::builtin("iota_F", Space::WHatF).unwrap();
    for x in slice(Signature::plain(Space::WWedge), 5, 0) {
        let a = diff_operators::apply(&i_f, &chi_wedge(&x).unwrap()).unwrap();
        let b = chi_wedge(&diff_operators::apply(&i_w, &x).unwrap()).unwrap();
        assert!(equal_in_quotient(&a, &b), "{x}");
    }
}

#[test]
fn transported_equality_agrees_with_direct_closure() {
    let sig = Signature::plain(Space::WHat);
    let xs = slice(sig, 4, 0);
    for a in &xs {
        for b in &xs {
            let diff = a.minus(b);
            let direct = with_shared(|qt| qt.is_zero(&diff, 4)).unwrap();
            assert_eq!(hat_is_zero(&diff, 4).unwrap(), direct, "{a} vs {b}");
        }
    }
}
