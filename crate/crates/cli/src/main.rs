//! `splitkit`: splitting types, normal bundles and the paper-family checks
//! from the command line.
//!
//! Exit status: 0 on success, 2 when a checked claim fails, 1 on a usage,
//! input or computation error.

mod commands;
mod output;
mod parse;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use splitkit::algebra::{FieldSpec, DEFAULT_PRIME, DEFAULT_SEED};

use output::Format;

#[derive(Parser, Debug)]
#[command(name = "splitkit", version, about = "Splitting types of bundles on P^1 and normal bundles of rational curves")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Field characteristic: a prime below 2^31, or 0 for the rationals.
    #[arg(long = "char", global = true, default_value_t = DEFAULT_PRIME)]
    pub characteristic: u64,
    /// Master seed, decimal or 0x-prefixed hex.
    #[arg(long, global = true, env = "SPLITKIT_SEED", value_parser = parse_seed)]
    pub seed: Option<u64>,
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Shorthand for `--format tsv`.
    #[arg(long, global = true)]
    pub tsv: bool,
}

impl Global {
    pub fn seed(&self) -> u64 {
        self.seed.unwrap_or(DEFAULT_SEED)
    }

    fn format(&self) -> Format {
        if self.tsv {
            Format::Tsv
        } else {
            self.format
        }
    }
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let s = s.trim();
    match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(&hex.replace('_', ""), 16),
        None => s.replace('_', "").parse(),
    }
    .map_err(|e| format!("bad seed {s:?}: {e}"))
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Kernel splitting of a graded map read from JSON.
    Splitting(commands::SplittingArgs),
    /// Normal bundle of a rational normal curve in a complete intersection.
    RncCi(commands::RncCiArgs),
    /// Normal bundle of a parametrized curve via its Jacobian.
    CurveNormal(commands::CurveArgs),
    /// Surjectivity of H^0(I_C(d)) -> Hom(N_C, O(ed)) over a grid or on random curves.
    Phi(commands::PhiArgs),
    /// Ideal and squared-ideal section counts against the chain-of-lines counts.
    Counts(commands::CountsArgs),
    /// Rebuild a hard-coded family and compare with its known normal bundle.
    Paper(commands::PaperArgs),
    /// Random complete intersections of quadrics through R_n.
    Conjecture(commands::ConjectureArgs),
    /// Degree arithmetic.
    #[command(subcommand)]
    Arith(commands::ArithCommand),
}

/// Error report; `input` echoes the object that triggered it.
#[derive(Debug, Serialize)]
pub struct CliError {
    pub error: String,
    pub input: Option<String>,
}

impl CliError {
    pub fn new(error: impl ToString) -> Self {
        CliError { error: error.to_string(), input: None }
    }

    pub fn with_input(error: impl ToString, input: impl Into<String>) -> Self {
        CliError { error: error.to_string(), input: Some(input.into()) }
    }
}

impl From<splitkit::error::Error> for CliError {
    fn from(e: splitkit::error::Error) -> Self {
        CliError::new(e)
    }
}

impl From<parse::ParseError> for CliError {
    fn from(e: parse::ParseError) -> Self {
        CliError::new(e)
    }
}

fn run(cli: Cli) -> Result<output::Output, CliError> {
    if let Some(j) = cli.global.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global().map_err(CliError::new)?;
    }
    let field = FieldSpec::from_characteristic(cli.global.characteristic)?;
    let g = &cli.global;
    match cli.command {
        Command::Splitting(a) => commands::splitting(field, a),
        Command::RncCi(a) => commands::rnc_ci(field, a),
        Command::CurveNormal(a) => commands::curve_normal(field, a),
        Command::Phi(a) => commands::phi(field, g, a),
        Command::Counts(a) => commands::counts(field, g, a),
        Command::Paper(a) => commands::paper(field, a),
        Command::Conjecture(a) => commands::conjecture(field, g, a),
        Command::Arith(a) => commands::arith(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let format = cli.global.format();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.render(format));
            if out.mismatch {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            match format {
                Format::Json => eprintln!("{}", serde_json::to_string_pretty(&e).expect("errors serialize")),
                _ => match &e.input {
                    Some(i) => eprintln!("error: {}\ninput: {i}", e.error),
                    None => eprintln!("error: {}", e.error),
                },
            }
            ExitCode::from(1)
        }
    }
}
