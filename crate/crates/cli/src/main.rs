//! `pseudofn`: certified norm computations and verification suites.

mod report;
mod scalar;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use pseudofn::groupalg::{FiniteGroup, GroupAlgebraElement};
use pseudofn::laurent::quotient_gap;
use pseudofn::pnorm::{pnorm_with, PowerConfig};
use pseudofn::PExponent;
use serde_json::json;

use suites::Ctx;

#[derive(Parser, Debug)]
#[command(name = "pseudofn", version, about = "Certified l^p operator norms for group algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Certified bracket for the induced p-norm of a matrix file.
    Pnorm {
        /// JSON matrix file: {"rows", "cols", "entries": [[[re, im], ...], ...]}.
        matrix: PathBuf,
        #[arg(long)]
        p: PExponent,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Relative stopping tolerance of the power iteration.
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// Norm of (1, i) on Z_2 against 2^|1/r - 1/2|.
    Gamma {
        /// Exponents, e.g. `1 1.2 4/3 inf`.
        #[arg(required = true)]
        r: Vec<PExponent>,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Target norm on Z_m against the Folner lift on Z.
    Quotient {
        #[arg(long)]
        modulus: usize,
        /// Comma-separated coefficients, e.g. `1,0+1i`.
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        #[arg(long)]
        p: PExponent,
        #[arg(long)]
        k: usize,
        /// Half-width L of the section window (default 501 k m).
        #[arg(long)]
        window: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Allowed shortfall of the lift below the target.
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Run a verification suite and write its report.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(suites::SUITES))]
        suite: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Write the JSON report here instead of standard output.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Closed-form and width tolerance.
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        /// Overlap tolerance for isometry checks.
        #[arg(long, default_value_t = 1e-7)]
        overlap_tol: f64,
        /// Record wall time per check (reports are then no longer reproducible).
        #[arg(long)]
        timings: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

type BoxError = Box<dyn std::error::Error>;

fn run(command: Command) -> Result<bool, BoxError> {
    match command {
        Command::Pnorm { matrix, p, seed, tol } => {
            let a = pseudofn::io::read_matrix(&matrix)?;
            let iv = pnorm_with(&a, p, &PowerConfig::default().with_seed(seed).with_tol(tol))?;
            println!("{}", serde_json::to_string_pretty(&iv)?);
            Ok(true)
        }
        Command::Gamma { r, tol } => {
            println!("{:>18}  {:>18}  {:>18}  {:>18}  verdict", "r", "lower", "upper", "2^|1/r-1/2|");
            let mut all = true;
            for r in r {
                let iv = suites::gamma_interval(r)?;
                let value = suites::gamma_closed_form(r);
                let ok = suites::gamma_row_ok(&iv, value, tol);
                all &= ok;
                println!(
                    "{:>18}  {:>18.15}  {:>18.15}  {:>18.15}  {}",
                    r.to_string(),
                    iv.lower,
                    iv.upper,
                    value,
                    if ok { "pass" } else { "FAIL" }
                );
            }
            Ok(all)
        }
        Command::Quotient { modulus, coeffs, p, k, window, seed, tol } => {
            let coeffs = scalar::parse_complex_list(&coeffs).map_err(|e| format!("--coeffs: {e}"))?;
            if coeffs.len() != modulus {
                return Err(format!("--coeffs: {} coefficients for modulus {modulus}", coeffs.len()).into());
            }
            let f = GroupAlgebraElement::new(Arc::new(FiniteGroup::cyclic(modulus)), coeffs)?;
            let g = quotient_gap(&f, p, k, window, seed)?;
            let ok = g.sandwich_holds(tol);
            let out = json!({
                "record": g.to_record(),
                "apriori_gap": g.apriori_gap(),
                "gap_bound": g.gap_bound(),
                "sandwich": ok,
            });
            println!("{}", serde_json::to_string_pretty(&out)?);
            Ok(ok)
        }
        Command::Verify { suite, seed, report, tol, overlap_tol, timings } => {
            let ctx = Ctx { seed, tol, overlap_tol, timings };
            let result = suites::run(&suite, &ctx).ok_or_else(|| format!("unknown suite `{suite}`"))?;
            let text = result.to_json();
            match report {
                Some(path) => {
                    std::fs::write(&path, &text)?;
                    println!(
                        "{}: {} passed, {} failed -> {}",
                        result.suite,
                        result.passed,
                        result.failed,
                        path.display()
                    );
                }
                None => print!("{text}"),
            }
            Ok(result.verdict)
        }
    }
}
