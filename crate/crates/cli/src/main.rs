//! Command-line front end: load a model and a property, then check, explain,
//! or verify.
//!
//! Exit codes: 0 when the property holds (or verification passed), 1 when it
//! is violated (or verification failed), 2 on usage or input errors.

use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use lassocause::causality::compute_causes_budgeted;
use lassocause::oracle::{verify_model, OracleConfig};
use lassocause::report::{CheckReport, ExplainReport, LassoJson, VerifyCheckJson, VerifyReport};
use lassocause::{
    complete_terminal_states, parse_ltl, parse_model, partition, search, Error, Verdict,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// Report the verdict and a first violating trace.
    Check,
    /// Compute the full causality-class report.
    Explain,
    /// Run the brute-force differential suite on this model.
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "lassocause",
    about = "Explicit-state LTL checking with event-order causality explanations",
    version
)]
struct Args {
    /// Model file to analyze.
    #[arg(long)]
    model: String,

    /// Property in concrete LTL syntax.
    #[arg(long, conflicts_with = "prop_file")]
    prop: Option<String>,

    /// File containing the property.
    #[arg(long)]
    prop_file: Option<String>,

    #[arg(long, value_enum, default_value_t = Mode::Check)]
    mode: Mode,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Abort enumeration beyond this many lassos.
    #[arg(long, default_value_t = search::DEFAULT_LASSO_CAP)]
    max_lassos: usize,

    /// Raise every formula's unfold budget to at least this many unfoldings.
    #[arg(long)]
    max_unfold: Option<usize>,

    /// Seed for the verification oracle.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Shorthand for `--mode verify`.
    #[arg(long, default_value_t = false)]
    verify: bool,
}

fn run(args: &Args) -> Result<bool, Error> {
    let model_text = std::fs::read_to_string(&args.model)?;
    let ts = parse_model(&model_text)?;
    let ts = complete_terminal_states(&ts);

    let prop_text = match (&args.prop, &args.prop_file) {
        (Some(p), None) => p.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)?.trim().to_string(),
        _ => {
            return Err(Error::PreconditionViolated(
                "exactly one of --prop and --prop-file is required".into(),
            ))
        }
    };
    let phi = parse_ltl(&prop_text)?;

    let mode = if args.verify { Mode::Verify } else { args.mode };
    match mode {
        Mode::Check => {
            let verdict = lassocause::ltl::check_model(&ts, &phi, args.max_lassos)?;
            let report = CheckReport {
                property: prop_text,
                verdict: if verdict.holds() { "holds" } else { "violated" }.to_string(),
                witness: match &verdict {
                    Verdict::Holds => None,
                    Verdict::Violated(w) => Some(LassoJson::of(&ts, w)),
                },
            };
            match args.format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => println!("{}", report.to_json()),
            }
            Ok(verdict.holds())
        }
        Mode::Explain => {
            let universe = partition(&ts, &phi, args.max_lassos)?;
            let analysis = compute_causes_budgeted(&ts, &universe, args.max_unfold)?;
            let report = ExplainReport::new(&ts, &universe, &analysis, &prop_text);
            match args.format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => println!("{}", report.to_json()),
            }
            Ok(universe.bad.is_empty())
        }
        Mode::Verify => {
            let config = OracleConfig {
                seed: args.seed,
                min_unroll_factor: args.max_unfold.unwrap_or(10).max(10),
                ..OracleConfig::default()
            };
            let checks = verify_model(&ts, &phi, args.max_lassos, &config)?;
            let passed = checks.iter().all(|c| c.passed);
            let report = VerifyReport {
                property: prop_text,
                passed,
                checks: checks
                    .into_iter()
                    .map(|c| VerifyCheckJson {
                        name: c.name,
                        passed: c.passed,
                        detail: c.detail,
                    })
                    .collect(),
            };
            match args.format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => println!("{}", report.to_json()),
            }
            Ok(passed)
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
