use diagram_core::{canonicalize, q, qi, Diagram, FormalSum, Leg, Signature, Space};
use relations_engine::*;

fn key_legs(space: Space, legs: usize, triv: usize, w: usize) -> SliceKey {
    SliceKey {
        sig: Signature::plain(space),
        legs: LegWord::Any,
        max_legs: legs,
        max_trivalent: triv,
        max_loops: 0,
        max_weight: w,
        max_discs: 0,
    }
}

#[test]
fn empty_slice_has_rank_zero() {
    let key = SliceKey::exact(Signature::plain(Space::W), vec![Leg::G1, Leg::G1], 0);
    assert_eq!(enumerate_slice(&key).unwrap().len(), 0);
    assert_eq!(slice_rank(&key).unwrap(), 0);
}

#[test]
fn pbw_small_slice() {
    for w in [2usize, 3, 4] {
        let b = slice_rank(&key_legs(Space::B, 2, 2, w)).unwrap();
        let a = slice_rank(&key_legs(Space::A, 2, 2, w)).unwrap();
        eprintln!("w={w} B={b} A={a}");
        assert_eq!(a, b);
    }
}

#[test]
fn ihx_sides_equal() {
    let sig = Signature::plain(Space::WTilde);
    let d = Diagram::wheel(3, Leg::FAT);
    let rows = ihx_rows(&canonicalize(&d, sig).unwrap().0, sig);
    assert!(!rows.is_empty());
    for row in rows {
        let mut lhs = FormalSum::zero(sig);
        lhs.add_canonical(row[0].0.clone(), &row[0].1);
        let mut rhs = FormalSum::zero(sig);
        for (x, c) in &row[1..] {
            rhs.add_canonical(x.clone(), &-c.clone());
        }
        let key = SliceKey::weight(sig, 6);
        assert!(quotient_equal(&lhs, &rhs, &key).unwrap());
        assert!(!quotient_equal(&lhs, &FormalSum::zero(sig), &key).unwrap() || lhs.is_zero());
    }
}

#[test]
fn outside_slice_is_error() {
    let sig = Signature::plain(Space::B);
    let w = FormalSum::from_diagram(&Diagram::wheel(4, Leg::FAT), sig);
    let key = SliceKey::weight(sig, 4);
    assert!(matches!(
        quotient_equal(&w, &FormalSum::zero(sig), &key),
        Err(RelError::OutsideSlice(_))
    ));
}

#[test]
fn odd_wheels_vanish_in_b() {
    let sig = Signature::plain(Space::B);
    let w3 = FormalSum::from_diagram(&Diagram::wheel(3, Leg::FAT), sig);
    let key = SliceKey::weight(sig, 6);
    assert!(quotient_equal(&w3, &FormalSum::zero(sig), &key).unwrap());
    let w2 = FormalSum::from_diagram(&Diagram::wheel(2, Leg::FAT), sig);
    assert!(!quotient_equal(&w2, &FormalSum::zero(sig), &key).unwrap());
    let _ = (q(1, 2), qi(1));
}

#[test]
fn pbw_vertex_capped_slice() {
    let b = slice_rank(&key_legs(Space::B, 4, 4, 6)).unwrap();
    let a = slice_rank(&key_legs(Space::A, 4, 4, 6)).unwrap();
    assert_eq!(a, b);
}

#[test]
fn pbw_leg_filtration_weight_six() {
    for l in 0..=4usize {
        let b = slice_rank(&key_legs(Space::B, l, 6, 6)).unwrap();
        let a = slice_rank(&key_legs(Space::A, l, 6, 6)).unwrap();
        assert_eq!(a, b, "legs <= {l}");
    }
}

#[test]
fn slice_without_sites_has_no_rows() {
    let key = SliceKey::exact(Signature::plain(Space::W), vec![Leg::FAT, Leg::FAT, Leg::FAT, Leg::FAT], 0);
    let basis = enumerate_slice(&key).unwrap();
    assert!(!basis.is_empty());
    assert!(relation_vectors(&basis).unwrap().rows.is_empty());
}

#[test]
fn stu_row_relates_orderings_to_bracket() {
    let sig = Signature::plain(Space::A);
    // legs 0-2 and 1-3 joined by chords
    let d = build(
        vec![Leg::FAT; 4],
        false,
        0,
        &[(diagram_core::End::Leg(0), diagram_core::End::Leg(2)), (diagram_core::End::Leg(1), diagram_core::End::Leg(3))],
        0,
    );
    let (c, _) = canonicalize(&d, sig).unwrap();
    let rows = leg_rows(&c, sig);
    assert!(!rows.is_empty());
    for row in &rows {
        assert!(is_unit_row(row));
        assert_eq!(row.len(), 3);
        let legs: Vec<usize> = row.iter().map(|(x, _)| x.nlegs()).collect();
        assert_eq!(legs.iter().filter(|&&n| n == 4).count(), 2);
        assert_eq!(legs.iter().filter(|&&n| n == 3).count(), 1);
    }
}

#[test]
fn every_row_is_zero_in_quotient() {
    for space in [Space::WTilde, Space::A, Space::W, Space::WWedge] {
        let sig = Signature::plain(space);
        let key = SliceKey::weight(sig, 6);
        let basis = enumerate_slice(&key).unwrap();
        for d in basis.diagrams.iter().take(60) {
            for row in all_rows(d, sig) {
                let mut s = FormalSum::zero(sig);
                for (x, c) in &row {
                    s.add_canonical(x.clone(), c);
                }
                assert!(quotient_equal(&s, &FormalSum::zero(sig), &key).unwrap());
            }
        }
    }
}

#[test]
fn reduce_many_gives_shared_normal_forms() {
    for space in [Space::A, Space::B] {
        let sig = Signature::plain(space);
        let d = build(
            vec![Leg::FAT; 4],
            false,
            0,
            &[(diagram_core::End::Leg(0), diagram_core::End::Leg(2)), (diagram_core::End::Leg(1), diagram_core::End::Leg(3))],
            0,
        );
        let x = FormalSum::from_diagram(&d, sig);
        let (c, _) = canonicalize(&d, sig).unwrap();
        let mut rel = FormalSum::zero(sig);
        if let Some(row) = all_rows(&c, sig).into_iter().next() {
            for (y, k) in &row {
                rel.add_canonical(y.clone(), k);
            }
        }
        let shifted = x.plus(&rel.scaled(&q(3, 2)));
        let out = with_shared(|qq| qq.reduce_many(&[x.clone(), shifted, x.scaled(&qi(2))], 6)).unwrap();
        assert_eq!(out.len(), 3);
        assert_eq!(out[0], out[1]);
        assert_eq!(out[2], out[0].scaled(&qi(2)));
        assert!(!out[0].is_zero());
    }
    assert!(with_shared(|qq| qq.reduce_many(&[], 6)).unwrap().is_empty());
}
