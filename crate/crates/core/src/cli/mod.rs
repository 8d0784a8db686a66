//! Command-line front end: problem files in, reports out.
//!
//! Exit codes: 0 success, 1 internal failure, 2 parse or schema error,
//! 3 unsupported input class, 4 numeric budget exhausted.

mod commands;
pub mod problem;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::curve::CurveError;
use crate::interp::InterpError;
use crate::numeric::NumericError;
use crate::trop::TropError;

pub use problem::Problem;
pub use report::{Provenance, Report};

/// Seed used when neither the command line nor the problem file gives one.
pub const DEFAULT_SEED: u64 = 20_240_917;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Schema(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("budget exhausted: {0}")]
    Budget(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Internal(_) => 1,
            CliError::Schema(_) => 2,
            CliError::Unsupported(_) => 3,
            CliError::Budget(_) => 4,
        }
    }
}

impl From<TropError> for CliError {
    fn from(e: TropError) -> Self {
        match e {
            TropError::NonMonomialGenerator { .. } | TropError::DensityNotIntegrable | TropError::TianUndefined(_) => {
                CliError::Unsupported(e.to_string())
            }
            _ => CliError::Schema(e.to_string()),
        }
    }
}

impl From<CurveError> for CliError {
    fn from(e: CurveError) -> Self {
        CliError::Schema(e.to_string())
    }
}

impl From<InterpError> for CliError {
    fn from(e: InterpError) -> Self {
        match e {
            InterpError::Trop(t) => t.into(),
            InterpError::Unsupported(m) => CliError::Unsupported(m),
            other => CliError::Schema(other.to_string()),
        }
    }
}

impl From<NumericError> for CliError {
    fn from(e: NumericError) -> Self {
        match e {
            NumericError::Trop(t) => t.into(),
            NumericError::BudgetExhausted { .. } | NumericError::Indeterminate { .. } => CliError::Budget(e.to_string()),
            NumericError::Unsupported(_) | NumericError::NotCertified(_) | NumericError::Hypothesis(_) => {
                CliError::Unsupported(e.to_string())
            }
            NumericError::InvalidPlan(_) | NumericError::InvalidBracket(_) => CliError::Schema(e.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "zhouval", version, about = "Exact relative types, jumping numbers and interpolation checks")]
pub struct Args {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Seed for every random stream.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Monte-Carlo samples per t.
    #[arg(long, global = true)]
    pub samples: Option<u64>,
    /// Co-run the independent grid, Taylor and bisection oracles.
    #[arg(long, global = true)]
    pub oracle: bool,
    /// Print result lines only.
    #[arg(long, global = true)]
    pub quiet: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Relative type of `g` (or the product of `functions`) against a weight.
    Sigma { problem: PathBuf },
    /// Jumping number of a weight, optionally twisted by `g` and a background density.
    Lct { problem: PathBuf },
    /// Breakpoints of the Tian function on `tian_range`.
    Tian { problem: PathBuf },
    /// Valuative interpolation check.
    Interpolate { problem: PathBuf },
    /// Monte-Carlo check of the sublevel-set integral limits.
    VerifyIntegral {
        problem: PathBuf,
        #[arg(long)]
        t_max: Option<f64>,
    },
    /// Universal denominator of a monomial curve.
    Denominator { problem: PathBuf },
    /// Whether the common zero set of `functions` is the origin.
    Zeroset { problem: PathBuf },
}

impl Command {
    fn problem(&self) -> &PathBuf {
        match self {
            Command::Sigma { problem }
            | Command::Lct { problem }
            | Command::Tian { problem }
            | Command::Interpolate { problem }
            | Command::VerifyIntegral { problem, .. }
            | Command::Denominator { problem }
            | Command::Zeroset { problem } => problem,
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Command::Sigma { .. } => "sigma",
            Command::Lct { .. } => "lct",
            Command::Tian { .. } => "tian",
            Command::Interpolate { .. } => "interpolate",
            Command::VerifyIntegral { .. } => "verify-integral",
            Command::Denominator { .. } => "denominator",
            Command::Zeroset { .. } => "zeroset",
        }
    }
}

/// Runs one command and builds its report.
pub fn execute(args: &Args) -> Result<Report, CliError> {
    let path = args.command.problem();
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Schema(format!("{}: {e}", path.display())))?;
    let label = path.file_name().map_or_else(|| path.display().to_string(), |n| n.to_string_lossy().into_owned());
    execute_text(args, &text, &label)
}

/// Same as [`execute`], with the problem file already in memory. The path in
/// `args` is ignored; `label` names the problem in the report.
pub fn execute_text(args: &Args, text: &str, label: &str) -> Result<Report, CliError> {
    let problem = Problem::parse(text)?;
    let seed = args.seed.or(problem.seed()).unwrap_or(DEFAULT_SEED);
    let mut report = Report::new(args.command.name(), label, seed);
    match &args.command {
        Command::Sigma { .. } => commands::sigma(&problem, args, &mut report)?,
        Command::Lct { .. } => commands::lct(&problem, args, &mut report)?,
        Command::Tian { .. } => commands::tian(&problem, &mut report)?,
        Command::Interpolate { .. } => commands::interpolate(&problem, args, &mut report)?,
        Command::VerifyIntegral { t_max, .. } => commands::verify_integral(&problem, args, *t_max, &mut report)?,
        Command::Denominator { .. } => commands::denominator(&problem, &mut report)?,
        Command::Zeroset { .. } => commands::zeroset(&problem, &mut report)?,
    }
    Ok(report)
}

/// Parses `argv` without printing; help and version requests are errors.
pub fn parse_args<I, T>(argv: I) -> Result<Args, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    Args::try_parse_from(argv).map_err(|e| CliError::Schema(e.to_string().trim_end().to_string()))
}

/// Parses `argv`, runs, writes the report and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match execute(&args) {
        Ok(report) => {
            let written = match args.format {
                Format::Table => report.write_table(out, args.quiet),
                Format::Json => report.write_json(out),
                Format::Csv => report.write_csv(out),
            };
            match written {
                Ok(()) => 0,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    1
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
