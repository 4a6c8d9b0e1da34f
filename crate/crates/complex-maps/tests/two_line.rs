mod common;

use common::{equal_in_quotient, slice, zero_in_quotient};
use complex_maps::*;
use diagram_core::{q, qi, Diagram, FormalSum, Leg, Line, Signature, Space};
use diff_operators::{apply, builtin};

fn wt(w: usize) -> Vec<FormalSum> {
    let mut v = slice(Signature::plain(Space::WTilde), w, 0);
    v.extend(slice(Signature::with_iota(Space::WTilde), w, 0));
    v
}

#[test]
fn theta_term_count() {
    let st = Signature::plain(Space::WTilde);
    for x in slice(st, 6, 0) {
        let d = x.iter().next().unwrap().0;
        let a = d.legs.iter().filter(|l| l.flavor == diagram_core::Flavor::Fat).count() as u32;
        let b = d.count_g1() as u32;
        let raw = theta_raw(d).unwrap();
        // products with two filled discs vanish before they are emitted
        let vanished = 5u64.pow(a) - (3u64.pow(a) + 2 * a as u64 * 3u64.pow(a.saturating_sub(1)));
        assert_eq!(raw.len() as u64 + vanished * 3u64.pow(b), 5u64.pow(a) * 3u64.pow(b), "{x}");
        if a <= 1 {
            assert_eq!(raw.len() as u64, 5u64.pow(a) * 3u64.pow(b));
        }
    }
    assert_eq!(theta(&FormalSum::unit(st)).unwrap(), FormalSum::unit(Signature::plain(Space::TdR)));
}

#[test]
fn theta_is_a_chain_map() {
    for x in wt(6) {
        let sig = x.signature();
        let d = builtin("d", Space::WTilde).unwrap();
        let d_tdr = builtin("d_TdR", Space::TdR).unwrap();
        let a = apply(&d_tdr, &theta(&x).unwrap()).unwrap();
        let b = theta(&apply(&d, &x).unwrap()).unwrap();
        assert!(equal_in_quotient(&a, &b), "d on {x}");
        if !sig.iota {
            let i = builtin("iota", Space::WTilde).unwrap();
            let i_t = builtin("iota_T", Space::TdR).unwrap();
            let a = apply(&i_t, &theta(&x).unwrap()).unwrap();
            let b = theta(&apply(&i, &x).unwrap()).unwrap();
            assert!(equal_in_quotient(&a, &b), "iota on {x}");
        }
    }
}

#[test]
fn evaluations_of_theta_are_the_injections() {
    for x in wt(6) {
        let t = theta(&x).unwrap();
        assert_eq!(eval_disc(Endpoint::Zero, &t).unwrap(), inject_line(Side::C, &x).unwrap(), "{x}");
        assert_eq!(eval_disc(Endpoint::One, &t).unwrap(), inject_line(Side::Nc, &x).unwrap(), "{x}");
    }
}

#[test]
fn integration_identities_on_disc_slices() {
    let d_t = builtin("d_T", Space::TdR).unwrap();
    let d_b = builtin("d_bullet", Space::TdR).unwrap();
    let i_t = builtin("iota_T", Space::TdR).unwrap();
    for x in slice(Signature::plain(Space::TdR), 6, 4) {
        let a = integrate_discs(&apply(&i_t, &x).unwrap()).unwrap();
        let b = apply(&i_t, &integrate_discs(&x).unwrap()).unwrap();
        assert!(a.plus(&b).is_zero(), "iota on {x}");
        let a = integrate_discs(&apply(&d_t, &x).unwrap()).unwrap();
        let b = apply(&d_t, &integrate_discs(&x).unwrap()).unwrap();
        assert!(a.plus(&b).is_zero(), "d on {x}");
        let lhs = eval_disc(Endpoint::One, &x).unwrap().minus(&eval_disc(Endpoint::Zero, &x).unwrap());
        let rhs = integrate_discs(&apply(&d_b, &x).unwrap()).unwrap();
        assert_eq!(lhs, rhs, "FTC on {x}");
    }
}

#[test]
fn evaluation_examples() {
    let sig = Signature::plain(Space::TdR);
    let base = Diagram::chord(Leg::on(diagram_core::Flavor::G1, Line::Nc), Leg::on(diagram_core::Flavor::Fat, Line::C));
    let mut d = base.clone();
    d.open = 3;
    let x = FormalSum::from_diagram(&d, sig);
    assert!(eval_disc(Endpoint::Zero, &x).unwrap().is_zero());
    let plain = FormalSum::from_diagram(&base, Signature::plain(Space::T));
    assert_eq!(eval_disc(Endpoint::One, &x).unwrap(), plain);
    assert!(integrate_discs(&x).unwrap().is_zero());
}

#[test]
fn integral_worked_example() {
    // filled disc written right of one odd leg with four open discs: −1/5
    let nc = |f| Leg::on(f, Line::Nc);
    let d = Diagram::chord(nc(diagram_core::Flavor::G1), nc(diagram_core::Flavor::Fat));
    let x = with_filled_disc_at(&d, 1, 4);
    let out = integrate_discs(&x).unwrap();
    let t = FormalSum::from_diagram(&d, Signature::plain(Space::T));
    assert_eq!(out, t.scaled(&q(-1, 5)));
    let front = with_filled_disc_at(&d, 0, 0);
    assert_eq!(integrate_discs(&front).unwrap(), t);
}

#[test]
fn omega_examples() {
    let tsig = Signature::plain(Space::T);
    // three commutative grade-1 legs, each on a chord to a distinct fat leg
    let legs = vec![
        Leg::on(diagram_core::Flavor::Fat, Line::Nc),
        Leg::on(diagram_core::Flavor::Fat, Line::Nc),
        Leg::on(diagram_core::Flavor::Fat, Line::Nc),
        Leg::on(diagram_core::Flavor::G1, Line::C),
        Leg::on(diagram_core::Flavor::G1, Line::C),
        Leg::on(diagram_core::Flavor::G1, Line::C),
    ];
    use diagram_core::End::Leg as L;
    let d = relations_engine::build(legs, false, 0, &[(L(0), L(3)), (L(1), L(4)), (L(2), L(5))], 0);
    let out = omega_collapse(&FormalSum::from_diagram(&d, tsig)).unwrap();
    assert_eq!(out.len(), 6);
    let plus = out.iter().filter(|(_, c)| **c == q(1, 6)).count();
    let minus = out.iter().filter(|(_, c)| **c == q(-1, 6)).count();
    assert_eq!((plus, minus), (3, 3));
    for x in wt(6) {
        assert_eq!(omega_collapse(&inject_line(Side::Nc, &x).unwrap()).unwrap(), x);
        if !x.signature().iota {
            let lhs = omega_collapse(&inject_line(Side::C, &x).unwrap()).unwrap();
            let rhs = chi_w(&tau(&x).unwrap()).unwrap();
            assert_eq!(lhs, rhs, "{x}");
        }
    }
}

#[test]
fn omega_is_a_chain_map() {
    let d = builtin("d", Space::WTilde).unwrap();
    let i = builtin("iota", Space::WTilde).unwrap();
    let d_t = builtin("d_T", Space::T).unwrap();
    let i_t = builtin("iota_T", Space::T).unwrap();
    for x in slice(Signature::plain(Space::T), 6, 0) {
        let a = apply(&d, &omega_collapse(&x).unwrap()).unwrap();
        let b = omega_collapse(&apply(&d_t, &x).unwrap()).unwrap();
        assert!(equal_in_quotient(&a, &b), "d on {x}");
        let a = apply(&i, &omega_collapse(&x).unwrap()).unwrap();
        let b = omega_collapse(&apply(&i_t, &x).unwrap()).unwrap();
        assert!(equal_in_quotient(&a, &b), "iota on {x}");
    }
}

#[test]
fn closed_form_st_matches_integral_of_theta() {
    for x in wt(5) {
        assert_eq!(homotopy_st(&x).unwrap(), homotopy_st_literal(&x).unwrap(), "{x}");
    }
}

#[test]
fn two_line_homotopy() {
    let d = builtin("d", Space::WTilde).unwrap();
    let d_t = builtin("d_T", Space::T).unwrap();
    let i = builtin("iota", Space::WTilde).unwrap();
    let i_t = builtin("iota_T", Space::T).unwrap();
    for x in wt(5) {
        let lhs = inject_line(Side::Nc, &x).unwrap().minus(&inject_line(Side::C, &x).unwrap());
        let mut rhs = apply(&d_t, &homotopy_st(&x).unwrap()).unwrap();
        rhs.add_assign(&homotopy_st(&apply(&d, &x).unwrap()).unwrap());
        assert!(equal_in_quotient(&lhs, &rhs), "{x}");
        if !x.signature().iota {
            let mut c = homotopy_st(&apply(&i, &x).unwrap()).unwrap();
            c.add_assign(&apply(&i_t, &homotopy_st(&x).unwrap()).unwrap());
            assert!(zero_in_quotient(&c), "iota on {x}");
        }
    }
}

#[test]
fn averaging_homotopy() {
    let d = builtin("d", Space::WTilde).unwrap();
    let i = builtin("iota", Space::WTilde).unwrap();
    for x in wt(5) {
        let mut lhs = x.clone();
        if !x.signature().iota {
            lhs.sub_assign(&chi_w(&tau(&x).unwrap()).unwrap());
        } else {
            let y = x.reinterpret(Signature::with_iota(Space::W));
            lhs.sub_assign(&chi_w(&y).unwrap());
        }
        let mut rhs = apply(&d, &homotopy_s(&x).unwrap()).unwrap();
        rhs.add_assign(&homotopy_s(&apply(&d, &x).unwrap()).unwrap());
        assert!(equal_in_quotient(&lhs, &rhs), "{x}");
        if !x.signature().iota {
            let mut c = homotopy_s(&apply(&i, &x).unwrap()).unwrap();
            c.add_assign(&apply(&i, &homotopy_s(&x).unwrap()).unwrap());
            assert!(zero_in_quotient(&c), "iota on {x}");
        }
    }
    assert!(homotopy_s(&FormalSum::unit(Signature::plain(Space::WTilde))).unwrap().is_zero());
}

#[test]
fn beta_values() {
    assert_eq!(beta(0, 0), qi(1));
    assert_eq!(beta(1, 0), q(1, 2));
    assert_eq!(beta(1, 1), q(1, 6));
    assert_eq!(beta(2, 3), q(1, 60));
}
