//! Built-in operators: d, ι, t, d_F, ι_F, d_T, ι_T, d_•, d_{T_dR}, ι on Ŵ_∧,
//! and the contracting homotopy s.

use crate::error::{OpError, Result};
use crate::operator::{apply, Operator, SubstitutionRule};
use diagram_core::{q, qi, Coeff, Flavor, FormalSum, Fragment, Leg, Port, Space};
use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

/// Names accepted by [`builtin`].
pub const NAMES: [&str; 10] = [
    "d", "iota", "t", "d_F", "iota_F", "d_T", "iota_T", "d_bullet", "d_TdR", "iota_wedge",
];

fn rule(target: Flavor, terms: Vec<(Coeff, Fragment)>) -> SubstitutionRule {
    SubstitutionRule { target, terms }
}

/// The fork: two grade-1 legs meeting the root at one vertex.
pub fn fork() -> Fragment {
    Fragment::vertex(&[Leg::G1, Leg::G1], [Port::Root, Port::Leg(1), Port::Leg(0)])
}

fn d_rules() -> Vec<SubstitutionRule> {
    vec![
        rule(Flavor::G1, vec![(qi(1), Fragment::leg(Leg::FAT))]),
        rule(Flavor::Fat, vec![]),
    ]
}

fn iota_rules() -> Vec<SubstitutionRule> {
    vec![
        rule(Flavor::G1, vec![(qi(1), Fragment::cap())]),
        rule(
            Flavor::Fat,
            vec![(qi(1), Fragment::vertex(&[Leg::G1], [Port::Root, Port::Leg(0), Port::Iota]))],
        ),
    ]
}

fn op(name: &str, grade: i32, spaces: &[Space], rules: Vec<SubstitutionRule>, discs: bool) -> Operator {
    Operator {
        name: name.to_string(),
        grade,
        spaces: spaces.to_vec(),
        rules,
        acts_on_discs: discs,
    }
}

fn table() -> &'static HashMap<&'static str, Arc<Operator>> {
    static TABLE: OnceLock<HashMap<&'static str, Arc<Operator>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let w = [Space::W, Space::WTilde, Space::WHat];
        let t_spaces = [Space::T, Space::TdR];
        let d_f = vec![
            rule(
                Flavor::G1,
                vec![(qi(1), Fragment::leg(Leg::F)), (q(1, 2), fork())],
            ),
            rule(
                Flavor::F,
                vec![(qi(1), Fragment::vertex(&[Leg::F, Leg::G1], [Port::Root, Port::Leg(0), Port::Leg(1)]))],
            ),
        ];
        let iota_f = vec![rule(Flavor::G1, vec![(qi(1), Fragment::cap())]), rule(Flavor::F, vec![])];
        let pass = vec![rule(Flavor::G1, vec![]), rule(Flavor::Fat, vec![])];
        let ops = [
            op("d", 1, &w, d_rules(), false),
            op("iota", -1, &w, iota_rules(), false),
            op(
                "t",
                -1,
                &[Space::W, Space::WTilde],
                vec![rule(Flavor::Fat, vec![(qi(1), Fragment::leg(Leg::G1))]), rule(Flavor::G1, vec![])],
                false,
            ),
            op("d_F", 1, &[Space::WF, Space::WHatF], d_f, false),
            op("iota_F", -1, &[Space::WF, Space::WHatF], iota_f.clone(), false),
            op("d_T", 1, &t_spaces, d_rules(), false),
            op("iota_T", -1, &t_spaces, iota_rules(), false),
            op("d_bullet", 1, &[Space::TdR], pass, true),
            op("d_TdR", 1, &[Space::TdR], d_rules(), true),
            op("iota_wedge", -1, &[Space::WWedge], iota_f, false),
        ];
        ops.into_iter().map(|o| (NAMES.iter().find(|n| **n == o.name).copied().unwrap(), Arc::new(o))).collect()
    })
}

/// A built-in operator by name, checked against a space.
pub fn builtin(name: &str, space: Space) -> Result<Arc<Operator>> {
    let o = table().get(name).ok_or_else(|| OpError::Unsupported {
        op: name.to_string(),
        sig: space.name().to_string(),
    })?;
    if !o.spaces.contains(&space) {
        return Err(OpError::Unsupported {
            op: name.to_string(),
            sig: space.name().to_string(),
        });
    }
    Ok(o.clone())
}

/// The contracting homotopy `s = t / #legs` on 𝒲 and 𝒲̃.
pub fn contracting_homotopy_s(s: &FormalSum) -> Result<FormalSum> {
    let t = builtin("t", s.signature().space)?;
    let mut out = FormalSum::zero(s.signature());
    for (d, c) in s.sorted() {
        let n = d.nlegs();
        if n == 0 {
            return Err(OpError::ZeroLegs);
        }
        let one = FormalSum::from_diagram(d, s.signature()).scaled(c);
        out.add_scaled(&apply(&t, &one)?, &q(1, n as i64));
    }
    Ok(out)
}

/// Applies a built-in operator or `s` by name.
pub fn apply_named(name: &str, s: &FormalSum) -> Result<FormalSum> {
    if name == "s" {
        return contracting_homotopy_s(s);
    }
    apply(&*builtin(name, s.signature().space)?, s)
}
