//! `planar-c5` command-line front end.
//!
//! Exit status: 0 success, 1 assertion or verification failure, 2 usage,
//! input or I/O error.

mod commands;

use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "planar-c5",
    version,
    about = "Five-cycles in planar graphs: constructions, counting, enumeration, verification"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a named graph family member.
    Construct(ConstructArgs),
    /// Count short cycles in an input graph.
    Count(CountArgs),
    /// Enumerate all triangulations on n vertices.
    Enumerate(EnumerateArgs),
    /// Exhaustively verify the extremal theorem and lemma suites.
    Verify(VerifyArgs),
    /// Time counting or enumeration.
    Bench(BenchArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Graph6,
    Edgelist,
    Json,
    Auto,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Counting,
    Enumeration,
}

/// A single order `8` or an inclusive range `5..10` / `5..=10`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orders(pub RangeInclusive<usize>);

impl Orders {
    pub fn single(&self) -> Option<usize> {
        (self.0.start() == self.0.end()).then_some(*self.0.start())
    }
}

fn parse_orders(s: &str) -> Result<Orders, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("invalid order {t:?}"));
    let range = match s.split_once("..") {
        None => {
            let n = num(s)?;
            n..=n
        }
        Some((a, b)) => num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?,
    };
    if range.is_empty() {
        return Err(format!("empty range {s:?}"));
    }
    Ok(Orders(range))
}

fn parse_workers(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(w) if w >= 1 => Ok(w),
        _ => Err(format!("workers must be a positive integer, got {s:?}")),
    }
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Workers {
    /// Worker threads (default: available parallelism).
    #[arg(long, value_parser = parse_workers)]
    pub workers: Option<usize>,
}

impl Workers {
    pub fn get(&self) -> usize {
        self.workers
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
    }
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    /// dn, en, a8, a11, exc0..exc5
    #[arg(long)]
    pub family: String,
    #[arg(long, value_parser = parse_orders)]
    pub n: Option<Orders>,
    /// Also print the five-cycle count.
    #[arg(long)]
    pub count: bool,
    #[arg(long, value_enum, default_value = "graph6")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct CountArgs {
    /// Input file, `-` or absent for standard input.
    pub input: Option<PathBuf>,
    #[arg(long, default_value_t = 5)]
    pub k: usize,
    /// Cross-check against the brute-force counter.
    #[arg(long)]
    pub oracle: bool,
    #[arg(long, value_enum, default_value = "auto")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(long, value_parser = parse_orders)]
    pub n: Orders,
    /// Corpus file (a directory when `--n` is a range).
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub workers: Workers,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_parser = parse_orders, default_value = "5..12")]
    pub n: Orders,
    #[command(flatten)]
    pub workers: Workers,
    /// Seed for edge-deleted variants and monotonicity samples.
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Run only the lemma suites.
    #[arg(long)]
    pub lemmas_only: bool,
    /// Allow orders 13 and 14.
    #[arg(long)]
    pub allow_large: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(long, value_enum, default_value = "counting")]
    pub suite: Suite,
    #[arg(long, value_parser = parse_orders, default_value = "10")]
    pub n: Orders,
    #[command(flatten)]
    pub workers: Workers,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

/// Why a command did not succeed.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Assertion(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Assertion(_) => 1,
            Failure::Usage(_) => 2,
        }
    }
}

impl From<planar_c5::Error> for Failure {
    fn from(e: planar_c5::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("i/o error: {e}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Construct(a) => commands::construct(a),
        Command::Count(a) => commands::count(a),
        Command::Enumerate(a) => commands::enumerate(a),
        Command::Verify(a) => commands::verify(a),
        Command::Bench(a) => commands::bench(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Usage(msg) => eprintln!("error: {msg}"),
                Failure::Assertion(msg) => eprintln!("FAILED: {msg}"),
            }
            ExitCode::from(f.code())
        }
    }
}
