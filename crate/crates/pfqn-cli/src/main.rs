//! Command-line front end for the exact normalizing-constant library.
//!
//! Three subcommands: `compute` runs one algorithm (or picks one by its
//! work estimate), `check` runs every algorithm and compares the values
//! exactly, `bench` sweeps a seeded instance family and tabulates work
//! counters and wall times.

mod bench;
mod check;
mod compute;
mod instance_file;
mod output;

use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pfqn::{Algorithm, Guards};

use crate::bench::BenchPlan;
use crate::instance_file::{InstanceFile, RequestedQuantity};
use crate::output::OutputMode;

/// A subcommand failure, carrying the documented exit code: 2 for invalid
/// input or flags, 3 for a forced algorithm whose precondition failed.
/// (Cross-check disagreement exits 4 but still renders a report, so it is
/// signalled out of band.)
pub enum CliError {
    Input(String),
    Precondition(String),
}

impl CliError {
    fn message(&self) -> &str {
        match self {
            CliError::Input(message) | CliError::Precondition(message) => message,
        }
    }

    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Precondition(_) => 3,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "pfqn",
    about = "Exact product-form normalizing constants and simplex integrals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute G and/or J for one instance file.
    Compute(ComputeArgs),
    /// Run every algorithm on one instance and verify exact agreement.
    Check(CheckArgs),
    /// Generate a seeded instance family and tabulate per-algorithm work.
    Bench(BenchArgs),
}

#[derive(Args)]
struct ComputeArgs {
    /// Instance file: {"theta": [[...]], "population": [...], "quantity"?}.
    #[arg(long)]
    input: PathBuf,
    /// Algorithm name, or "auto" to pick by estimated work.
    #[arg(long, default_value = "auto")]
    algorithm: String,
    /// Override the quantity requested by the file: G, J, or both.
    #[arg(long)]
    quantity: Option<String>,
    /// Output rendering: json or text.
    #[arg(long, default_value = "json")]
    output: String,
    /// State-space cap for the enumeration oracle.
    #[arg(long, default_value_t = 10_000_000)]
    guard: u64,
    /// Term cap for series-expansion routes.
    #[arg(long = "expansion-guard", default_value_t = 1_000_000)]
    expansion_guard: u64,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long)]
    input: PathBuf,
    /// Output rendering: json or text.
    #[arg(long, default_value = "json")]
    output: String,
    #[arg(long, default_value_t = 10_000_000)]
    guard: u64,
    #[arg(long = "expansion-guard", default_value_t = 1_000_000)]
    expansion_guard: u64,
}

#[derive(Args)]
struct BenchArgs {
    /// Station counts to sweep.
    #[arg(long, value_delimiter = ',', default_value = "4")]
    stations: Vec<u64>,
    /// Class counts to sweep.
    #[arg(long, value_delimiter = ',', default_value = "1")]
    classes: Vec<u64>,
    /// Total populations to sweep (split as evenly as the class count allows).
    #[arg(long, value_delimiter = ',', default_value = "50,100,200")]
    totals: Vec<u64>,
    /// Algorithms to run on each generated instance.
    #[arg(long, value_delimiter = ',', default_value = "convolution")]
    algorithms: Vec<String>,
    /// Seed for the instance generator.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output rendering: csv or json.
    #[arg(long, default_value = "csv")]
    output: String,
    #[arg(long, default_value_t = 10_000_000)]
    guard: u64,
    #[arg(long = "expansion-guard", default_value_t = 1_000_000)]
    expansion_guard: u64,
}

fn load_instance(path: &Path) -> Result<InstanceFile, CliError> {
    instance_file::load(path).map_err(CliError::Input)
}

fn parse_mode(name: &str) -> Result<OutputMode, CliError> {
    OutputMode::parse(name)
        .ok_or_else(|| CliError::Input(format!("unknown output mode {name:?}; use json or text")))
}

fn guards(guard: u64, expansion_guard: u64) -> Guards {
    Guards {
        state_space: guard,
        expansion: expansion_guard,
    }
}

/// Runs a subcommand and reports (rendered output, exit code).
fn dispatch(command: &Command) -> Result<(String, u8), CliError> {
    match command {
        Command::Compute(args) => {
            let file = load_instance(&args.input)?;
            let mode = parse_mode(&args.output)?;
            let quantity = match &args.quantity {
                None => None,
                Some(name) => Some(RequestedQuantity::parse(name).ok_or_else(|| {
                    CliError::Input(format!("unknown quantity {name:?}; use G, J or both"))
                })?),
            };
            let rendered = compute::run(
                &file,
                &args.algorithm,
                quantity,
                mode,
                &guards(args.guard, args.expansion_guard),
            )?;
            Ok((rendered, 0))
        }
        Command::Check(args) => {
            let file = load_instance(&args.input)?;
            let mode = parse_mode(&args.output)?;
            let (rendered, agreement) =
                check::run(&file, mode, &guards(args.guard, args.expansion_guard))?;
            Ok((rendered, if agreement { 0 } else { 4 }))
        }
        Command::Bench(args) => {
            let mode = bench::parse_format(&args.output).ok_or_else(|| {
                CliError::Input(format!(
                    "unknown output mode {:?}; use csv or json",
                    args.output
                ))
            })?;
            let algorithms = args
                .algorithms
                .iter()
                .map(|name| {
                    Algorithm::parse(name).ok_or_else(|| {
                        CliError::Input(format!("unknown algorithm {name:?} in --algorithms"))
                    })
                })
                .collect::<Result<Vec<Algorithm>, CliError>>()?;
            let plan = BenchPlan {
                stations: args.stations.clone(),
                classes: args.classes.clone(),
                totals: args.totals.clone(),
                algorithms,
                seed: args.seed,
            };
            let rendered = bench::run(&plan, mode, &guards(args.guard, args.expansion_guard))?;
            Ok((rendered, 0))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli.command) {
        Ok((rendered, code)) => {
            // ignore write failures (e.g. a closed pipe) rather than panic
            let _ = writeln!(io::stdout(), "{rendered}");
            ExitCode::from(code)
        }
        Err(error) => {
            let _ = writeln!(io::stderr(), "error: {}", error.message());
            ExitCode::from(error.code())
        }
    }
}
