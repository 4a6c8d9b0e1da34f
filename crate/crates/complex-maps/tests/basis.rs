mod common;

use common::{equal_in_quotient, slice, zero_in_quotient};
use complex_maps::*;
use diagram_core::{q, qi, Diagram, Flavor, FormalSum, Leg, Signature, Space};
use diff_operators::{apply, builtin};
use num_traits::Signed;

#[test]
fn basis_changes_are_mutually_inverse() {
    for sig in [Signature::plain(Space::WF), Signature::with_iota(Space::WF)] {
        for x in slice(sig, 6, 0) {
            assert_eq!(basis_dot_to_f(&basis_f_to_dot(&x).unwrap()).unwrap(), x, "{x}");
        }
    }
    for sig in [Signature::plain(Space::W), Signature::with_iota(Space::W)] {
        for x in slice(sig, 6, 0) {
            assert_eq!(basis_f_to_dot(&basis_dot_to_f(&x).unwrap()).unwrap(), x, "{x}");
        }
    }
    for x in slice(Signature::plain(Space::WHatF), 5, 0) {
        assert_eq!(basis_dot_to_f(&basis_f_to_dot(&x).unwrap()).unwrap(), x, "{x}");
    }
}

#[test]
fn basis_changes_commute_with_d_and_iota() {
    let d = builtin("d", Space::W).unwrap();
    let i = builtin("iota", Space::W).unwrap();
    let d_f = builtin("d_F", Space::WF).unwrap();
    let i_f = builtin("iota_F", Space::WF).unwrap();
    for x in slice(Signature::plain(Space::WF), 6, 0) {
        let a = apply(&d, &basis_f_to_dot(&x).unwrap()).unwrap();
        let b = basis_f_to_dot(&apply(&d_f, &x).unwrap()).unwrap();
        assert!(equal_in_quotient(&a, &b), "d on {x}");
        let a = apply(&i, &basis_f_to_dot(&x).unwrap()).unwrap();
        let b = basis_f_to_dot(&apply(&i_f, &x).unwrap()).unwrap();
        assert!(equal_in_quotient(&a, &b), "iota on {x}");
    }
    for x in slice(Signature::plain(Space::W), 6, 0) {
        let a = apply(&d_f, &basis_dot_to_f(&x).unwrap()).unwrap();
        let b = basis_dot_to_f(&apply(&d, &x).unwrap()).unwrap();
        assert!(equal_in_quotient(&a, &b), "d on {x}");
        let a = apply(&i_f, &basis_dot_to_f(&x).unwrap()).unwrap();
        let b = basis_dot_to_f(&apply(&i, &x).unwrap()).unwrap();
        assert!(equal_in_quotient(&a, &b), "iota on {x}");
    }
}

#[test]
fn f_chord_expansion_coefficients() {
    let chord = Diagram::chord(Leg::F, Leg::F);
    let terms = f_expansion_raw(&chord).unwrap();
    let coeffs: Vec<_> = terms.iter().map(|t| t.0.clone()).collect();
    assert_eq!(coeffs, vec![qi(1), q(-1, 2), q(-1, 2), q(1, 4)]);
    let shapes: Vec<(usize, u32)> = terms.iter().map(|t| (t.1.nlegs(), t.1.nverts)).collect();
    assert_eq!(shapes, vec![(2, 0), (3, 1), (3, 1), (4, 2)]);
}

#[test]
fn upsilon_of_two_wheel() {
    let w2 = Diagram::wheel(2, Leg::FAT);
    let raw = f_expansion_raw(&w2.map_flavors(|_| Flavor::F)).unwrap();
    let coeffs: Vec<_> = raw.iter().map(|t| t.0.clone()).collect();
    assert_eq!(coeffs, vec![qi(1), q(-1, 2), q(-1, 2), q(1, 4)]);
    let u = upsilon(&FormalSum::from_diagram(&w2, Signature::plain(Space::B))).unwrap();
    assert_eq!(u.signature(), Signature::plain(Space::W));
    let d = builtin("d", Space::W).unwrap();
    let i = builtin("iota", Space::W).unwrap();
    assert!(zero_in_quotient(&apply(&d, &u).unwrap()));
    assert!(zero_in_quotient(&apply(&i, &u).unwrap()));
}

#[test]
fn phi_b_lands_in_basic_cocycles() {
    let d_f = builtin("d_F", Space::WF).unwrap();
    let i_f = builtin("iota_F", Space::WF).unwrap();
    for x in slice(Signature::plain(Space::B), 6, 0) {
        let y = phi_b(&x).unwrap();
        assert!(apply(&i_f, &y).unwrap().is_zero(), "iota on {x}");
        assert!(zero_in_quotient(&apply(&d_f, &y).unwrap()), "d on {x}");
    }
}

#[test]
fn hat_iota_after_iota_counts_grade_one_legs() {
    let i_f = builtin("iota_F", Space::WF).unwrap();
    for x in slice(Signature::plain(Space::WF), 6, 0) {
        let j = x.iter().next().unwrap().0.count_g1() as i64;
        let back = hat_iota(&apply(&i_f, &x).unwrap()).unwrap();
        assert_eq!(back, x.scaled(&qi(j)), "{x}");
    }
    let i_w = builtin("iota_wedge", Space::WWedge).unwrap();
    for x in slice(Signature::plain(Space::WWedge), 6, 0) {
        let j = x.iter().next().unwrap().0.count_g1() as i64;
        let back = hat_iota(&apply(&i_w, &x).unwrap()).unwrap();
        assert_eq!(back, x.scaled(&qi(j)), "{x}");
    }
}

#[test]
fn hat_iota_moves_iota_leg_to_the_front() {
    let sig = Signature::with_iota(Space::WF);
    let d = Diagram::chord(Leg::F, Leg::G1).leg_to_iota(1).unwrap();
    let out = hat_iota(&FormalSum::from_diagram(&d, sig)).unwrap();
    let expect = FormalSum::from_diagram(&Diagram::chord(Leg::G1, Leg::F), Signature::plain(Space::WF));
    assert_eq!(out, expect);
    assert!(hat_iota(&expect).is_err());
}

#[test]
fn phi_a_round_trip() {
    let sig = Signature::plain(Space::ALoops);
    for x in slice(sig, 6, 0) {
        let y = phi_a(&x).unwrap();
        assert_eq!(phi_a_inverse(&y).unwrap(), x);
        assert!(y.iter().all(|(d, _)| d.count_g1() == 0));
    }
    let g = FormalSum::from_diagram(&Diagram::chord(Leg::G1, Leg::F), Signature::plain(Space::WWedge));
    assert!(matches!(phi_a_inverse(&g), Err(MapError::NotInZeroSummand(1))));
}

#[test]
fn averaging_maps() {
    let b = Signature::plain(Space::B);
    assert_eq!(chi_b(&FormalSum::unit(b)).unwrap(), FormalSum::unit(Signature::plain(Space::A)));
    let w2 = FormalSum::from_diagram(&Diagram::wheel(2, Leg::FAT), b);
    let a = chi_b(&w2).unwrap();
    assert_eq!(a, FormalSum::from_diagram(&Diagram::wheel(2, Leg::FAT), Signature::plain(Space::A)));
    for x in slice(Signature::plain(Space::W), 6, 0) {
        assert_eq!(tau(&chi_w(&x).unwrap()).unwrap(), x);
    }
    let st = Signature::plain(Space::WTilde);
    let g1 = FormalSum::from_diagram(&Diagram::chord(Leg::G1, Leg::G1), st);
    assert!(tau(&g1).unwrap().is_zero());
    let mixed = FormalSum::from_diagram(&Diagram::chord(Leg::FAT, Leg::G1), Signature::plain(Space::W));
    let avg = chi_w(&mixed).unwrap();
    let mut expect = FormalSum::zero(st);
    expect.add_raw(&Diagram::chord(Leg::FAT, Leg::G1), &q(1, 2));
    expect.add_raw(&Diagram::chord(Leg::G1, Leg::FAT), &q(1, 2));
    assert_eq!(avg, expect);
}

#[test]
fn chi_b_of_six_legs_has_six_factorial_orderings() {
    // a tree with six legs: every ordering is distinct in the ordered space
    let key = relations_engine::SliceKey::exact(Signature::plain(Space::B), vec![Leg::FAT; 6], 4);
    let basis = relations_engine::enumerate_slice(&key).unwrap();
    let d = basis.diagrams.iter().find(|d| d.nverts == 4).unwrap();
    let x = FormalSum::from_diagram(d, Signature::plain(Space::B));
    let a = chi_b(&x).unwrap();
    assert!(a.len() > 1);
    let mass: diagram_core::Coeff = a.iter().map(|(_, c)| c.abs()).sum();
    assert!(mass <= qi(1));
    assert!(a.iter().all(|(_, c)| (c * qi(720)).is_integer()));
    let mut manual = FormalSum::zero(Signature::plain(Space::A));
    signed_average(d, &[0, 1, 2, 3, 4, 5], &qi(1), &mut manual);
    assert_eq!(a, manual);
}

#[test]
fn pi_commutes_with_d_and_iota() {
    let st = Signature::plain(Space::WTilde);
    for name in ["d", "iota"] {
        let o_t = builtin(name, Space::WTilde).unwrap();
        let o_h = builtin(name, Space::WHat).unwrap();
        for x in slice(st, 5, 0) {
            let a = apply(&o_h, &project_pi(&x).unwrap()).unwrap();
            let b = project_pi(&apply(&o_t, &x).unwrap()).unwrap();
            assert_eq!(a, b, "{name} on {x}");
        }
    }
}

#[test]
fn unknown_map_and_wrong_domain() {
    let w = FormalSum::unit(Signature::plain(Space::W));
    assert!(matches!(apply_map("nope", &w), Err(MapError::UnknownMap(_))));
    assert!(matches!(apply_map("chi_B", &w), Err(MapError::Domain { .. })));
    for name in MAP_NAMES {
        let _ = apply_map(name, &w);
    }
}
