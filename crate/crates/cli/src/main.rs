//! Command-line surface: run algorithms, browse the pattern catalog,
//! export recorded circuits.
//!
//! Exit codes: 0 success, 1 domain error (capacity, promise violations,
//! inexpressible exports), 2 usage error (unknown commands, names or flag
//! combinations). The qubit cap defaults to 24 and can be overridden with
//! the `QPATTERNS_QUBIT_CAP` environment variable.

mod export;
mod patterns_cmd;
mod run;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(String),
}

impl From<qpatterns::Error> for CliError {
    fn from(e: qpatterns::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

#[derive(Parser)]
#[command(
    name = "qpatterns",
    version,
    about = "Quantum algorithm building blocks on a dense state-vector simulator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an algorithm and print a run report
    Run(run::RunArgs),
    /// Browse the pattern catalog and its link graph
    #[command(subcommand)]
    Patterns(patterns_cmd::PatternsCommand),
    /// Export a recorded circuit as OpenQASM 2.0
    ExportQasm(export::ExportArgs),
    /// Export a recorded circuit as a structured JSON document
    ExportCircuit(export::ExportArgs),
}

fn main() -> ExitCode {
    if let Ok(value) = std::env::var("QPATTERNS_QUBIT_CAP") {
        match value.parse::<usize>() {
            Ok(cap) if cap >= 1 => qpatterns::sim::set_qubit_cap(cap),
            _ => {
                eprintln!(
                    "usage error: QPATTERNS_QUBIT_CAP must be a positive integer, got {value:?}"
                );
                return ExitCode::from(2);
            }
        }
    }
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run(args) => run::execute(args),
        Command::Patterns(cmd) => patterns_cmd::execute(cmd),
        Command::ExportQasm(args) => export::execute(args, export::Format::Qasm),
        Command::ExportCircuit(args) => export::execute(args, export::Format::CircuitJson),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}
