//! `qhinv`: invariants of quasi-homogeneous isolated singularities.
//!
//! Exit status: 0 ok, 1 parse or usage error, 2 not quasi-homogeneous,
//! 3 non-isolated singularity, 4 smooth at the origin, 5 a self-check failed.

mod report;
mod request;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use qhinv_core::checks::run_checks;
use qhinv_core::groebner::DEFAULT_MAX_DEGREE;
use qhinv_core::mf_generators;

use request::{Failure, RawInput, Request, EXIT_CHECK_FAILED, EXIT_USAGE};

#[derive(Parser)]
#[command(
    name = "qhinv",
    version,
    about = "Exact invariants of quasi-homogeneous isolated singularities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report: Milnor number, genus, b-function, lengths, structure, spectrum.
    Analyze(Common),
    /// Length of D f^λ / D f^(λ+1) for each λ, or for every b-root.
    Lengths {
        #[command(flatten)]
        common: Common,
        /// Additional λ values; negative ones may be written bare after the input.
        #[arg(value_name = "LAMBDA")]
        lambdas: Vec<String>,
    },
    /// Roots of the b-function with multiplicities.
    Bfunction(Common),
    /// Spectrum table.
    Spectrum(Common),
    /// Generators of the annihilator presenting M(f), truncated by weighted degree.
    Hamiltonian(Common),
    /// Runs the internal identities on the input; exit 5 on any failure.
    Check(Common),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Common {
    /// Polynomial, e.g. "x^3+y^3+z^3"; `-` reads standard input.
    #[arg(allow_hyphen_values = true)]
    input: String,
    /// Comma-separated variable names; default is the sorted identifiers of the input.
    #[arg(long)]
    vars: Option<String>,
    /// Comma-separated weights overriding detection.
    #[arg(long)]
    weights: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Exact rational λ; repeatable.
    #[arg(long = "lambda", allow_hyphen_values = true, value_name = "LAMBDA")]
    lambda: Vec<String>,
    /// Weighted-degree bound for forms; default is the socle degree plus one.
    #[arg(long)]
    degree_bound: Option<u64>,
    /// Cap on the degree reached by the Groebner basis computation.
    #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
    max_gb_degree: u64,
}

impl Common {
    fn request(&self) -> Result<Request, Failure> {
        request::build(&RawInput {
            input: &self.input,
            vars: self.vars.as_deref(),
            weights: self.weights.as_deref(),
            max_gb_degree: self.max_gb_degree,
        })
    }

    fn json(&self) -> bool {
        self.format == Format::Json
    }

    fn degree_bound(&self, req: &Request) -> u64 {
        self.degree_bound
            .unwrap_or_else(|| req.analysis.grading.socle_degree().unwrap_or(0) + 1)
    }
}

/// Output text and exit status of a successful run.
struct Output {
    text: String,
    code: i32,
}

fn ok(text: String) -> Result<Output, Failure> {
    Ok(Output { text, code: 0 })
}

fn run(command: &Command) -> Result<Output, Failure> {
    match command {
        Command::Analyze(c) => ok(report::analyze(&c.request()?, c.json())),
        Command::Lengths { common: c, lambdas } => {
            let lambdas: Vec<_> = c
                .lambda
                .iter()
                .chain(lambdas)
                .map(|t| request::parse_lambda(t))
                .collect::<Result<_, _>>()?;
            let req = c.request()?;
            let rows = if lambdas.is_empty() {
                req.analysis.root_lengths()
            } else {
                lambdas
                    .into_iter()
                    .map(|l| {
                        let n = req.analysis.length_quotient(&l);
                        (l, n)
                    })
                    .collect()
            };
            ok(report::lengths(&req, &rows, c.json()))
        }
        Command::Bfunction(c) => ok(report::bfunction(&c.request()?, c.json())),
        Command::Spectrum(c) => ok(report::spectrum(&c.request()?, c.json())),
        Command::Hamiltonian(c) => {
            let req = c.request()?;
            let bound = c.degree_bound(&req);
            let gens = mf_generators(&req.analysis.polynomial, &req.analysis.grading, bound)
                .map_err(|e| Failure::usage(e.to_string()))?;
            ok(report::hamiltonian(&req, &gens, bound, c.json()))
        }
        Command::Check(c) => {
            let req = c.request()?;
            let outcomes = run_checks(&req.analysis, c.degree_bound(&req));
            let code = if outcomes.iter().all(|o| o.passed) {
                0
            } else {
                EXIT_CHECK_FAILED
            };
            Ok(Output {
                text: report::checks(&req, &outcomes, c.json()),
                code,
            })
        }
    }
}

const VALUE_FLAGS: &[&str] = &[
    "--vars",
    "--weights",
    "--format",
    "--lambda",
    "--degree-bound",
    "--max-gb-degree",
];

/// Lets `lengths F -4/3` mean `lengths F --lambda=-4/3`: after the input,
/// bare negative rationals become λ values instead of unknown flags.
fn normalize_args(args: Vec<String>) -> Vec<String> {
    if args.get(1).map(String::as_str) != Some("lengths") {
        return args;
    }
    let pos = 1;
    let mut out: Vec<String> = args[..=pos].to_vec();
    let mut seen_input = false;
    let mut expects_value = false;
    for arg in &args[pos + 1..] {
        if expects_value {
            expects_value = false;
        } else if VALUE_FLAGS.contains(&arg.as_str()) {
            expects_value = true;
        } else if arg == "--" || (arg.starts_with("--") && arg.len() > 2) {
        } else if !seen_input {
            seen_input = true;
        } else if arg.starts_with('-') && request::parse_lambda(arg).is_ok() {
            out.push(format!("--lambda={arg}"));
            continue;
        }
        out.push(arg.clone());
    }
    out
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse_from(normalize_args(std::env::args().collect())) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE as u8,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli.command) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            let _ = stdout.flush();
            ExitCode::from(out.code as u8)
        }
        Err(f) => {
            eprintln!("qhinv: {f}");
            ExitCode::from(f.code as u8)
        }
    }
}
