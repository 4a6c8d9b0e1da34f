//! The `wheelforge` command.

use clap::{Parser, Subcommand, ValueEnum};
use diagram_core::{serialize, Signature};
use std::process::ExitCode;
use verify_cli::error::write_file;
use verify_cli::*;

#[derive(Parser)]
#[command(name = "wheelforge", version, about = "Exact diagram algebra: identity suites, maps and quotient equality")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Axioms,
    Homotopy,
    Hw,
    Wheeling,
    Lambda,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Run an identity suite.
    Verify {
        suite: SuiteArg,
        /// Weight bound for slice-wide checks (default 6, or $WHEELFORGE_MAX_WEIGHT).
        #[arg(long, allow_hyphen_values = true)]
        max_weight: Option<String>,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Report style.
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        /// First input for the hw and wheeling suites.
        #[arg(long)]
        v: Option<String>,
        /// Second input for the hw and wheeling suites.
        #[arg(long)]
        w: Option<String>,
    },
    /// Apply a map or operator to a diagram file.
    Apply {
        name: String,
        #[arg(long = "in")]
        input: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Decide equality of two diagram files in the quotient.
    Eq {
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
        /// Expected space of both inputs, e.g. `A` or `W_iota`.
        #[arg(long)]
        space: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        max_weight: Option<String>,
    },
    /// Derive the wheel coefficients and write the coefficient file.
    DeriveOmega {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        out: Option<String>,
    },
    /// List the diagrams of a slice.
    Enumerate {
        /// Space name, e.g. `W_F` or `T_dR`.
        #[arg(long)]
        space: String,
        #[arg(long, allow_hyphen_values = true)]
        max_weight: Option<String>,
        #[arg(long, default_value_t = 0)]
        discs: usize,
    },
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Verify {
            suite,
            max_weight,
            threads,
            format,
            v,
            w,
        } => {
            let suite = match suite {
                SuiteArg::Axioms => Suite::Axioms,
                SuiteArg::Homotopy => Suite::Homotopy,
                SuiteArg::Hw => Suite::Hw,
                SuiteArg::Wheeling => Suite::Wheeling,
                SuiteArg::Lambda => Suite::Lambda,
            };
            let config = VerifyConfig {
                max_weight: resolve_max_weight(max_weight.as_deref())?,
                threads,
                format: match format {
                    FormatArg::Text => Format::Text,
                    FormatArg::Machine => Format::Machine,
                },
            };
            if config.max_weight < suite.min_weight() {
                eprintln!(
                    "warning: max weight {} is below {}, the smallest bound at which suite {} is meaningful",
                    config.max_weight,
                    suite.min_weight(),
                    suite.name()
                );
            }
            let inputs = Inputs {
                v: v.as_deref().map(load_sum).transpose()?,
                w: w.as_deref().map(load_sum).transpose()?,
            };
            let records = run_suite(suite, &config, &inputs)?;
            for r in &records {
                println!("{}", render(r, config.format));
            }
            Ok(if records.iter().all(Record::passed) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Apply { name, input, out } => {
            let s = load_sum(&input)?;
            let text = serialize(&apply_by_name(&name, &s)?);
            match out {
                Some(p) => write_file(&p, &text)?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Eq {
            lhs,
            rhs,
            space,
            max_weight,
        } => {
            let (a, b) = (load_sum(&lhs)?, load_sum(&rhs)?);
            let w = resolve_max_weight(max_weight.as_deref())?;
            let res = quotient_compare(&a, &b, space.as_deref(), w)?;
            println!(
                "{} in {} (w<={w}): difference has {} terms, normal form has {}",
                if res.equal { "equal" } else { "not equal" },
                a.signature(),
                res.difference_terms,
                res.reduced_terms
            );
            Ok(if res.equal { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::DeriveOmega { order, out } => {
            let res = match derive_omega_to(order, out.as_deref()) {
                Ok(r) => r,
                Err(CliError::Wheel(e)) => {
                    eprintln!("derivation failed: {e}");
                    return Ok(ExitCode::from(1));
                }
                Err(e) => return Err(e),
            };
            if !res.conflicts.is_empty() {
                for (k, old, new) in &res.conflicts {
                    eprintln!("b{k}: stored {old}, derived {new}");
                }
                return Ok(ExitCode::from(1));
            }
            if out.is_none() {
                print!("{}", res.text);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate {
            space,
            max_weight,
            discs,
        } => {
            let sig = Signature::parse(&space).ok_or_else(|| CliError::Config(format!("unknown space `{space}`")))?;
            let w = resolve_max_weight(max_weight.as_deref())?;
            let (n, text) = enumerate_text(sig, w, discs)?;
            eprintln!("{n} diagrams in {sig} up to weight {w}");
            print!("{text}");
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
