//! `topocount`: counts, representatives, w-sums, injectivity checks and
//! lower bounds for finite topologies.
//!
//! Exit status: 0 success, 1 verification failure, 2 usage or limits,
//! 3 I/O or parse errors.

mod cache;
mod commands;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;
use topocount::{BoundsError, EnumerateError, EnumerateOptions, VerifyError};

#[derive(Debug, Parser)]
#[command(
    name = "topocount",
    version,
    about = "Counting and combining finite topologies"
)]
pub struct Cli {
    /// Directory for cached class representatives.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Worker threads (defaults to the available parallelism).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub jobs: Option<u32>,
    /// Time budget for enumeration, in seconds.
    #[arg(long, global = true, value_parser = positive_seconds)]
    pub budget: Option<f64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// T(n), f(n), T0(n) and f0(n) by enumeration (n ≤ 6).
    Count { n: usize },
    /// One representative per homeomorphism class on n points (n ≤ 6).
    Reps { n: usize },
    /// w-sum of every pair from two files of topology text lines.
    Wsum { file1: PathBuf, file2: PathBuf },
    /// Injectivity of the class-level w-sum and the count inequalities
    /// (n + m ≤ 6).
    Verify { n: usize, m: usize },
    /// Max-product lower bounds for a sequence (T, f, T0, f0, a catalog id
    /// or a b-file path).
    Bounds { seq: String, from: usize, to: usize },
    /// Compares the preorder enumeration with the naive axiom filter (n ≤ 4).
    OracleCheck { n: usize },
}

fn positive_seconds(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err("budget must be a positive number of seconds".into())
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Limit(String),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}: {reason}", path.display())]
    Parse { path: PathBuf, reason: String },
    #[error("{0}")]
    Input(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Limit(_) => 2,
            CliError::Io { .. } | CliError::Parse { .. } | CliError::Input(_) => 3,
        }
    }
}

impl From<EnumerateError> for CliError {
    fn from(e: EnumerateError) -> Self {
        CliError::Limit(e.to_string())
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Topology(e) => CliError::Input(e.to_string()),
            e => CliError::Limit(e.to_string()),
        }
    }
}

impl From<BoundsError> for CliError {
    fn from(e: BoundsError) -> Self {
        CliError::Limit(e.to_string())
    }
}

/// What a command prints, and whether its checks passed.
pub struct Outcome {
    pub output: String,
    pub passed: bool,
}

impl Outcome {
    pub fn ok(output: String) -> Self {
        Outcome {
            output,
            passed: true,
        }
    }
}

/// Settings shared by every command.
pub struct RunConfig {
    pub cache_dir: Option<PathBuf>,
    pub format: Format,
    pub jobs: usize,
    pub budget: Option<Duration>,
}

impl RunConfig {
    pub fn enumerate_options(&self) -> EnumerateOptions {
        EnumerateOptions {
            jobs: self.jobs,
            deadline: self.budget.map(|b| Instant::now() + b),
        }
    }
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let jobs = match cli.jobs {
        Some(j) => j as usize,
        None => EnumerateOptions::default().jobs,
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build_global()
        .map_err(|e| CliError::Limit(e.to_string()))?;
    let cfg = RunConfig {
        cache_dir: cli.cache_dir,
        format: cli.format,
        jobs,
        budget: cli.budget.map(Duration::from_secs_f64),
    };
    match cli.command {
        Command::Count { n } => commands::count(&cfg, n),
        Command::Reps { n } => commands::reps(&cfg, n),
        Command::Wsum { file1, file2 } => commands::wsum(&cfg, &file1, &file2),
        Command::Verify { n, m } => commands::verify(&cfg, n, m),
        Command::Bounds { seq, from, to } => commands::bounds(&cfg, &seq, from, to),
        Command::OracleCheck { n } => commands::oracle_check(&cfg, n),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(outcome) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(outcome.output.as_bytes());
            let _ = out.flush();
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
