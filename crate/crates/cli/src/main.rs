mod audit;
mod compute;
mod gen;
mod io;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact k-limited packing and domination invariants, bound audits and
/// graph generators. Graphs travel as graph6, one per line.
#[derive(Parser)]
#[command(name = "limpack", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one invariant for every input graph.
    Compute(compute::ComputeArgs),
    /// Evaluate bounds on every input graph.
    Audit(audit::AuditArgs),
    /// Write generated graphs as graph6.
    #[command(subcommand)]
    Gen(gen::GenCommand),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    JsonLines,
    Csv,
}

/// Options shared by the commands that read graphs and run solvers.
#[derive(Args)]
pub struct RunArgs {
    /// Graph6 file, or `-` for standard input.
    #[arg(long, default_value = "-")]
    input: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Largest order for exponential searches.
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..=64))]
    cap: u64,
    /// Largest order for lower k-limited packing numbers.
    #[arg(long, default_value_t = 16, value_parser = clap::value_parser!(u64).range(1..=64))]
    lower_cap: u64,
    /// Threads evaluating distinct graphs; output order is unaffected.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    workers: u64,
}

pub const EXIT_VIOLATION: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_CAP: u8 = 3;
pub const EXIT_INFEASIBLE: u8 = 4;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute(args) => compute::run(args),
        Command::Audit(args) => audit::run(args),
        Command::Gen(cmd) => gen::run(cmd),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("limpack: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

/// A fatal error with the exit status it maps to.
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::input(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::input(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::input(e.to_string())
    }
}
