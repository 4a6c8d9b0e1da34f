//! End-to-end behaviour of the `wheelforge` binary.

use diagram_core::{serialize, FormalSum, Signature, Space};
use relations_engine::leg_rows;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_wheelforge"));
    c.env_remove("WHEELFORGE_MAX_WEIGHT");
    c
}

fn input(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "inputs", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(c: &mut Command) -> (i32, String, String) {
    let Output { status, stdout, stderr } = c.output().expect("binary runs");
    (
        status.code().unwrap_or(-1),
        String::from_utf8_lossy(&stdout).into_owned(),
        String::from_utf8_lossy(&stderr).into_owned(),
    )
}

fn terms(text: &str) -> usize {
    text.lines().filter(|l| l.contains("::")).count()
}

#[test]
fn negative_max_weight_is_a_config_error() {
    let (code, _, err) = run(bin().args(["verify", "axioms", "--max-weight", "-1"]));
    assert_eq!(code, 2);
    assert!(err.contains("max weight"));
    let (code, _, _) = run(bin().args(["verify", "lambda"]).env("WHEELFORGE_MAX_WEIGHT", "-1"));
    assert_eq!(code, 2);
    let (code, _, _) = run(bin().args(["verify", "nope"]));
    assert_eq!(code, 2);
}

#[test]
fn environment_sets_the_default_bound() {
    let (code, out, err) = run(bin().args(["verify", "lambda"]).env("WHEELFORGE_MAX_WEIGHT", "2"));
    assert_eq!(code, 0);
    assert!(out.contains("w<=2"));
    assert!(err.contains("warning"));
    let (code, out, _) = run(bin().args(["verify", "lambda", "--max-weight", "4"]).env("WHEELFORGE_MAX_WEIGHT", "2"));
    assert_eq!(code, 0);
    assert!(out.contains("w<=4"));
}

#[test]
fn machine_records_have_the_stable_fields() {
    let (code, out, _) = run(bin().args(["verify", "lambda", "--max-weight", "4", "--format", "machine"]));
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert!(!lines.is_empty());
    for l in lines {
        let v: serde_json::Value = serde_json::from_str(l).unwrap();
        for f in ["suite", "identity", "slice", "status"] {
            assert!(v.get(f).is_some(), "{f} missing in {l}");
        }
        assert_eq!(v["status"], "pass");
        assert_eq!(v["suite"], "lambda");
    }
}

#[test]
fn hw_suite_on_files() {
    let w2 = input("wheels2.dgm");
    let (code, out, _) = run(bin().args(["verify", "hw", "--v", &w2, "--w", &w2]));
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("[PASS]"));
    let (code, _, _) = run(bin().args(["verify", "hw", "--v", "/nonexistent.dgm"]));
    assert_eq!(code, 2);
}

#[test]
fn apply_examples() {
    let (code, out, _) = run(bin().args(["apply", "d", "--in", &input("empty.dgm")]));
    assert_eq!(code, 0);
    assert_eq!(terms(&out), 0);
    assert!(out.starts_with("space W\n"));
    let (code, out, _) = run(bin().args(["apply", "upsilon", "--in", &input("wheels2.dgm")]));
    assert_eq!(code, 0);
    // the two single-fork terms are isomorphic and merge canonically
    assert_eq!(terms(&out), 3);
    assert!(out.contains("1/4 ::"));
    let (code, out, _) = run(bin().args(["apply", "iota", "--in", &input("allF.dgm")]));
    assert_eq!(code, 0);
    assert_eq!(terms(&out), 0);
}

#[test]
fn apply_errors_and_output_file() {
    let (code, _, _) = run(bin().args(["apply", "nope", "--in", &input("empty.dgm")]));
    assert_eq!(code, 2);
    let (code, _, _) = run(bin().args(["apply", "chi_B", "--in", &input("empty.dgm")]));
    assert_eq!(code, 2);
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.dgm");
    std::fs::write(&bad, "space Q\nsum\n").unwrap();
    let (code, _, _) = run(bin().args(["apply", "d", "--in", bad.to_str().unwrap()]));
    assert_eq!(code, 2);
    let out = dir.path().join("out.dgm");
    let (code, _, _) = run(bin().args(["apply", "phi_B", "--in", &input("wheels2.dgm"), "--out", out.to_str().unwrap()]));
    assert_eq!(code, 0);
    let written = std::fs::read_to_string(out).unwrap();
    assert!(written.starts_with("space W_F\n"));
    assert_eq!(terms(&written), 1);
}

#[test]
fn eq_examples() {
    let w2 = input("wheels2.dgm");
    let (code, out, _) = run(bin().args(["eq", "--lhs", &w2, "--rhs", &w2]));
    assert_eq!(code, 0);
    assert!(out.contains("normal form has 0"));
    let dir = tempfile::tempdir().unwrap();
    let double = dir.path().join("double.dgm");
    let w = diagram_core::parse(&std::fs::read_to_string(&w2).unwrap()).unwrap();
    std::fs::write(&double, serialize(&w.scaled(&diagram_core::qi(2)))).unwrap();
    let (code, _, _) = run(bin().args(["eq", "--lhs", &w2, "--rhs", double.to_str().unwrap(), "--space", "B"]));
    assert_eq!(code, 1);
    let (code, _, _) = run(bin().args(["eq", "--lhs", &w2, "--rhs", &w2, "--space", "A"]));
    assert_eq!(code, 2);
    let (code, _, _) = run(bin().args(["eq", "--lhs", &w2, "--rhs", &w2, "--max-weight", "2"]));
    assert_eq!(code, 2);
}

#[test]
fn eq_on_an_stu_instance() {
    let sig = Signature::plain(Space::A);
    let d = relations_engine::build(
        vec![diagram_core::Leg::FAT; 4],
        false,
        0,
        &[(diagram_core::End::Leg(0), diagram_core::End::Leg(2)), (diagram_core::End::Leg(1), diagram_core::End::Leg(3))],
        0,
    );
    let (c, _) = diagram_core::canonicalize(&d, sig).unwrap();
    let row = leg_rows(&c, sig).into_iter().next().expect("an STU row");
    let mut lhs = FormalSum::zero(sig);
    let mut rhs = FormalSum::zero(sig);
    for (e, k) in &row {
        if *k > diagram_core::qi(0) {
            lhs.add_canonical(e.clone(), k);
        } else {
            rhs.add_canonical(e.clone(), &-k);
        }
    }
    assert!(lhs != rhs);
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("lhs.dgm"), dir.path().join("rhs.dgm"));
    std::fs::write(&a, serialize(&lhs)).unwrap();
    std::fs::write(&b, serialize(&rhs)).unwrap();
    let (code, out, _) = run(bin().args(["eq", "--lhs", a.to_str().unwrap(), "--rhs", b.to_str().unwrap(), "--space", "A"]));
    assert_eq!(code, 0, "{out}");
}

#[test]
fn derive_omega_writes_and_checks_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("omega.txt");
    let p = f.to_str().unwrap();
    let (code, _, _) = run(bin().args(["derive-omega", "--order", "2", "--out", p]));
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&f).unwrap();
    assert!(text.contains("b2 = 1/48"));
    assert!(!text.contains("b4"));
    let (code, _, _) = run(bin().args(["derive-omega", "--order", "2", "--out", p]));
    assert_eq!(code, 0);
    assert_eq!(std::fs::read_to_string(&f).unwrap(), text);
    let (code, _, _) = run(bin().args(["derive-omega", "--order", "4", "--out", p]));
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&f).unwrap();
    assert!(text.contains("b2 = 1/48") && text.contains("b4 = -1/5760"));
    std::fs::write(&f, "b2 = 1/24\n").unwrap();
    let (code, _, err) = run(bin().args(["derive-omega", "--order", "2", "--out", p]));
    assert_eq!(code, 1);
    assert!(err.contains("b2"));
    assert_eq!(std::fs::read_to_string(&f).unwrap(), "b2 = 1/24\n");
    let (code, out, _) = run(bin().args(["derive-omega", "--order", "2"]));
    assert_eq!(code, 0);
    assert!(out.contains("b2 = 1/48"));
    let (code, _, _) = run(bin().args(["derive-omega", "--order", "10"]));
    assert_eq!(code, 1);
}

#[test]
fn enumerate_lists_a_slice() {
    let (code, out, err) = run(bin().args(["enumerate", "--space", "W_F", "--max-weight", "2"]));
    assert_eq!(code, 0);
    assert_eq!(terms(&out), 4);
    assert!(err.contains("4 diagrams"));
    let parsed = diagram_core::parse(&out).unwrap();
    assert_eq!(parsed.len(), 4);
    let (code, _, _) = run(bin().args(["enumerate", "--space", "nowhere"]));
    assert_eq!(code, 2);
}
