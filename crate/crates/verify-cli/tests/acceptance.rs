//! Runs the ten acceptance criteria at exact tolerance and prints one
//! pass/fail line per criterion.

use std::process::ExitCode;
use std::time::Instant;
use verify_cli::{criterion_name, render, resolve_max_weight, run_criterion, Format, Inputs, VerifyConfig};

fn main() -> ExitCode {
    let config = VerifyConfig {
        max_weight: resolve_max_weight(None).expect("valid max weight"),
        ..VerifyConfig::default()
    };
    println!("acceptance criteria (max weight {})", config.max_weight);
    let mut failed = Vec::new();
    for n in 1..=10u8 {
        let start = Instant::now();
        let (ok, lines) = match run_criterion(n, &config, &Inputs::default()) {
            Ok(records) => {
                let bad: Vec<String> = records
                    .iter()
                    .filter(|r| !r.passed())
                    .map(|r| render(r, Format::Text))
                    .collect();
                (bad.is_empty(), (records.len(), bad))
            }
            Err(e) => (false, (0, vec![format!("error: {e}")])),
        };
        println!(
            "criterion {n:>2} {:<22} {} ({} checks, {:.1}s)",
            criterion_name(n),
            if ok { "PASS" } else { "FAIL" },
            lines.0,
            start.elapsed().as_secs_f64()
        );
        for l in lines.1 {
            println!("    {l}");
        }
        if !ok {
            failed.push(n);
        }
    }
    if failed.is_empty() {
        println!("all 10 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("failed criteria: {failed:?}");
        ExitCode::FAILURE
    }
}
