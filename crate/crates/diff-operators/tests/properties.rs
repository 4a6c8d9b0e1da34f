use diagram_core::{canonicalize, FormalSum, Signature, Space};
use diff_operators::*;
use proptest::prelude::*;
use relations_engine::{enumerate_slice, SliceKey};

fn basis(sig: Signature) -> Vec<diagram_core::Diagram> {
    enumerate_slice(&SliceKey::weight(sig, 6)).unwrap().diagrams
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn output_grade_is_input_plus_operator_grade(
        i in 0usize..10_000,
        name in prop::sample::select(vec!["d", "iota", "t"]),
    ) {
        let sig = Signature::plain(Space::W);
        let b = basis(sig);
        let d = &b[i % b.len()];
        let op = builtin(name, sig.space).unwrap();
        let out = apply(&op, &FormalSum::from_diagram(d, sig)).unwrap();
        for (e, _) in out.iter() {
            prop_assert_eq!(e.leg_grade() as i32, d.leg_grade() as i32 + op.grade);
        }
    }

    #[test]
    fn application_respects_leg_permutations(
        i in 0usize..10_000,
        perm_seed in prop::collection::vec(0usize..100, 8),
        name in prop::sample::select(vec!["d", "iota", "t"]),
    ) {
        // apply in the ordered space to a permuted presentation, then forget order
        let sig = Signature::plain(Space::W);
        let st = Signature::plain(Space::WTilde);
        let b = basis(sig);
        let d = &b[i % b.len()];
        let n = d.nlegs();
        let mut order: Vec<usize> = (0..n).collect();
        for k in (1..n).rev() {
            order.swap(k, perm_seed[k % perm_seed.len()] % (k + 1));
        }
        let p = d.permute_legs(&order);
        let (_, sign) = canonicalize(&p, sig).unwrap();
        let op = builtin(name, Space::WTilde).unwrap();
        let via_tilde = apply(&op, &FormalSum::from_diagram(&p, st)).unwrap();
        let out_sig = op.output_signature(sig).unwrap();
        let lhs = via_tilde.reinterpret(out_sig);
        let direct = apply(&op, &FormalSum::from_diagram(d, sig)).unwrap();
        let rhs = direct.scaled(&diagram_core::qi(sign as i64));
        prop_assert_eq!(lhs, rhs);
    }
}
