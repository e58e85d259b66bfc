use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod check;
mod convex;
mod eval;

#[derive(Parser)]
#[command(name = "ins", version, about = "Interval neutrosophic set algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression over the sets in a file.
    Eval(EvalArgs),
    /// Check algebraic laws on seeded random sets.
    Check(CheckArgs),
    /// Sample a built-in membership family for (strong) convexity.
    Convex(ConvexArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args)]
pub struct EvalArgs {
    #[arg(long, value_name = "PATH")]
    sets: PathBuf,
    #[arg(long, value_name = "TEXT")]
    expr: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Significant digits for printed endpoints.
    #[arg(long, value_name = "N", default_value_t = 17,
          value_parser = clap::value_parser!(u8).range(1..=17))]
    precision: u8,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("which").required(true).args(["law", "all"]))]
pub struct CheckArgs {
    #[arg(long, value_name = "NAME")]
    law: Option<String>,
    #[arg(long)]
    all: bool,
    /// Draw trial universes from the sets in this file.
    #[arg(long, value_name = "PATH")]
    sets: Option<PathBuf>,
    #[arg(long, value_name = "N", default_value_t = 1000,
          value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    #[arg(long, value_name = "N", default_value_t = 0)]
    seed: u64,
    #[arg(long, value_name = "X", default_value_t = 1e-12, value_parser = non_negative)]
    tol: f64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
pub struct ConvexArgs {
    /// e.g. `triangular(0,1)`, `gaussian(0,0.5)`, `bimodal(4)`.
    #[arg(long, value_name = "SPEC")]
    family: String,
    #[arg(long, value_name = "SPEC")]
    intersect: Option<String>,
    /// One `LO:HI` range per dimension.
    #[arg(
        long = "box",
        value_name = "LO:HI[,LO:HI...]",
        default_value = "-2:2",
        allow_hyphen_values = true
    )]
    bounds: String,
    #[arg(long, value_name = "N", default_value_t = 1000,
          value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    #[arg(long, value_name = "N", default_value_t = 11,
          value_parser = clap::value_parser!(u64).range(2..))]
    lambda_grid: u64,
    #[arg(long, value_name = "N", default_value_t = 0)]
    seed: u64,
    #[arg(long, value_name = "X", default_value_t = 1e-9, value_parser = non_negative)]
    tol: f64,
    /// Check strong convexity instead.
    #[arg(long)]
    strict: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn non_negative(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x.is_finite() && x >= 0.0 => Ok(x),
        Ok(_) => Err("must be a finite number >= 0".into()),
        Err(e) => Err(e.to_string()),
    }
}

/// Why a command stopped early. Usage and parse problems exit with 2,
/// semantic failures with 1.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Semantic(String),
}

/// `Ok(true)` when the command succeeded, `Ok(false)` when it ran to
/// completion but reported a violation.
pub type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Eval(args) => eval::run(&args),
        Command::Check(args) => check::run(&args),
        Command::Convex(args) => convex::run(&args),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Semantic(msg)) => {
            eprintln!("ins: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("ins: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Writes to stdout; a closed pipe is not an error worth reporting.
pub fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

pub fn read_sets(path: &std::path::Path) -> Result<ins_core::dsl::Environment, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    ins_core::dsl::parse_sets(&text).map_err(|e| Failure::Usage(format!("{}:{e}", path.display())))
}
