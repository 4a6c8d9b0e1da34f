//! The gluing operation, the Wheels element and its coefficient file.

use diagram_core::{disjoint_union, q, qi, Coeff, Diagram, FormalSum, Leg, Signature, Space};
use num_traits::{One, Zero};
use wheeling::*;

fn b() -> Signature {
    Signature::plain(Space::B)
}

fn sum(d: &Diagram) -> FormalSum {
    FormalSum::from_diagram(d, b())
}

fn chord() -> Diagram {
    Diagram::chord(Leg::FAT, Leg::FAT)
}

fn stored() -> Coefficients {
    default_coefficients().unwrap()
}

/// Taylor coefficients of ½·ln(sinh(a/2)/(a/2)) up to a^max, computed with
/// exact power series arithmetic.
fn literature_series(max: usize) -> Vec<Coeff> {
    let mut f = vec![Coeff::zero(); max + 1];
    let mut fact = Coeff::one();
    for k in 0..=max / 2 {
        if k > 0 {
            fact *= qi((2 * k) as i64) * qi((2 * k + 1) as i64);
        }
        let mut pow = Coeff::one();
        for _ in 0..2 * k {
            pow /= qi(2);
        }
        f[2 * k] = pow / &fact;
    }
    // ln(1 + u) with u = f - 1, via g' = f'/f.
    let mut g = vec![Coeff::zero(); max + 1];
    for n in 1..=max {
        let mut acc = qi(n as i64) * &f[n];
        for k in 1..n {
            acc -= qi(k as i64) * &g[k] * &f[n - k];
        }
        g[n] = acc / qi(n as i64);
    }
    g.iter().map(|c| c / qi(2)).collect()
}

#[test]
fn operating_by_empty_is_identity() {
    for x in [wheel(2), wheel(4), sum(&chord()), FormalSum::unit(b())] {
        assert_eq!(operate(&FormalSum::unit(b()), &x).unwrap().sorted(), x.sorted());
    }
}

#[test]
fn more_legs_than_target_gives_zero() {
    assert!(operate(&wheel(4), &wheel(2)).unwrap().is_zero());
    assert!(operate_raw(&chord(), &Diagram::empty()).unwrap().is_empty());
}

#[test]
fn injection_counts_and_leg_counts() {
    let w4 = Diagram::wheel(4, Leg::FAT);
    for (d1, n) in [(Diagram::empty(), 0), (chord(), 2), (Diagram::wheel(2, Leg::FAT), 2), (w4.clone(), 4)] {
        let raw = operate_raw(&d1, &w4).unwrap();
        let expected = (0..n).fold(1, |acc, i| acc * (4 - i));
        assert_eq!(raw.len(), expected);
        assert!(raw.iter().all(|d| d.nlegs() == 4 - n));
    }
}

#[test]
fn chord_on_chord_is_twice_the_circle() {
    let circle = chord().glue_legs(0, 1);
    assert_eq!(circle.nlegs(), 0);
    assert_eq!(circle.weight(), 2);
    let got = operate(&sum(&chord()), &sum(&chord())).unwrap();
    assert_eq!(got.sorted(), sum(&circle).scaled(&qi(2)).sorted());
}

#[test]
fn chord_on_two_wheel_closes_it() {
    let closed = Diagram::wheel(2, Leg::FAT).glue_legs(0, 1);
    let got = operate(&sum(&chord()), &wheel(2)).unwrap();
    assert_eq!(got.sorted(), sum(&closed).scaled(&qi(2)).sorted());
}

#[test]
fn operate_is_bilinear() {
    let x = wheel(2).scaled(&q(3, 4)).plus(&sum(&chord()));
    let y = wheel(4).plus(&disjoint_union(&wheel(2), &sum(&chord())).unwrap().scaled(&q(-2, 5)));
    let whole = operate(&x, &y).unwrap();
    let mut parts = FormalSum::zero(b());
    for (d1, c1) in x.iter() {
        for (d2, c2) in y.iter() {
            parts.add_scaled(&operate(&sum(d1), &sum(d2)).unwrap(), &(c1 * c2));
        }
    }
    assert_eq!(whole.sorted(), parts.sorted());
}

#[test]
fn odd_wheels_vanish() {
    for k in [1, 3, 5, 7] {
        assert!(wheel(k).is_zero(), "wheel {k}");
    }
    assert!(!wheel(2).is_zero() && !wheel(4).is_zero() && !wheel(6).is_zero());
}

#[test]
fn series_truncations() {
    let c = stored();
    let (b2, b4) = (c[&2].clone(), c[&4].clone());
    let s0 = wheels_series(0).unwrap();
    assert_eq!(s0.sum.sorted(), FormalSum::unit(b()).sorted());
    let s2 = wheels_series(2).unwrap();
    let want2 = FormalSum::unit(b()).plus(&wheel(2).scaled(&b2));
    assert_eq!(s2.sum.sorted(), want2.sorted());
    let s4 = wheels_series(4).unwrap();
    let sq = disjoint_union(&wheel(2), &wheel(2)).unwrap();
    let want4 = want2.plus(&wheel(4).scaled(&b4)).plus(&sq.scaled(&(&b2 * &b2 / qi(2))));
    assert_eq!(s4.sum.sorted(), want4.sorted());
    assert_eq!(s4.coefficients, c);
}

#[test]
fn series_errors() {
    assert!(matches!(wheels_series(MAX_ORDER + 2), Err(WheelError::OrderTooLarge { .. })));
    let mut c = Coefficients::new();
    c.insert(2, q(1, 48));
    assert!(matches!(wheels_series_with(4, &c), Err(WheelError::MissingCoefficient(4))));
}

#[test]
fn partial_omega_on_small_inputs() {
    let c = stored();
    let unit = FormalSum::unit(b());
    assert_eq!(partial_omega_with(&unit, &c).unwrap().sorted(), unit.sorted());
    let closed = Diagram::wheel(2, Leg::FAT).glue_legs(0, 1);
    let mut want = wheel(2);
    for d in operate_raw(&Diagram::wheel(2, Leg::FAT), &Diagram::wheel(2, Leg::FAT)).unwrap() {
        want.add_raw(&d, &c[&2]);
    }
    let got = partial_omega_with(&wheel(2), &c).unwrap();
    assert_eq!(got.sorted(), want.sorted());
    assert!(!closed.weight().is_zero());
}

#[test]
fn partial_omega_stabilizes() {
    // the value of b6 is irrelevant: ω₆ has more legs than any input here
    let mut c = stored();
    c.insert(6, q(7, 3));
    for x in [wheel(2), wheel(4), disjoint_union(&wheel(2), &sum(&chord())).unwrap()] {
        let l = max_legs(&x);
        let a = operate(&wheels_series_with(l, &c).unwrap().sum, &x).unwrap();
        let bb = operate(&wheels_series_with(l + 2, &c).unwrap().sum, &x).unwrap();
        assert_eq!(a.sorted(), bb.sorted());
        assert_eq!(partial_omega_with(&x, &c).unwrap().sorted(), a.sorted());
    }
    assert_eq!(partial_omega(&wheel(2), 4).unwrap().sorted(), partial_omega(&wheel(2), 2).unwrap().sorted());
}

#[test]
fn coefficient_file_round_trip_and_errors() {
    let c = stored();
    assert_eq!(parse_coefficients(&format_coefficients(&c)).unwrap(), c);
    let bad = parse_coefficients("b2 = 1/48\nb4 = nope\n");
    assert!(matches!(bad, Err(WheelError::Golden { line: 2, .. })));
    assert!(parse_coefficients("x2 = 1").is_err());
    assert!(parse_coefficients("b2 1").is_err());
}

#[test]
fn stored_coefficients_match_literature_series() {
    let lit = literature_series(6);
    assert_eq!(lit[2], q(1, 48));
    assert_eq!(lit[4], q(-1, 5760));
    for (k, v) in stored() {
        assert_eq!(v, lit[k], "b{k}");
    }
}
