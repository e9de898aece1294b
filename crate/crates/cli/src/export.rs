//! The `export-qasm` and `export-circuit` subcommands: build the recorded
//! circuit of an algorithm and write it out. Re-running with identical
//! inputs writes byte-identical files.

use std::path::PathBuf;

use clap::{Args, ValueEnum};

use qpatterns::algorithms::{bernstein_vazirani_circuit, deutsch_jozsa_circuit, simon_circuit};
use qpatterns::patterns::{amplitude_amplify_circuit, AmplificationProblem, GoodSet, Iterations};
use qpatterns::{BooleanFunction, Circuit, Gate};

use crate::CliError;

#[derive(Clone, Copy)]
pub enum Format {
    Qasm,
    CircuitJson,
}

#[derive(Args)]
pub struct ExportArgs {
    /// Circuit to export
    #[arg(value_enum)]
    target: Target,
    /// Width of the computational register (grover, bernstein-vazirani)
    #[arg(long)]
    qubits: Option<usize>,
    /// Marked basis indices, comma separated (grover)
    #[arg(long, value_delimiter = ',')]
    marked: Vec<u64>,
    /// Secret mask as an integer (bernstein-vazirani)
    #[arg(long)]
    secret: Option<u64>,
    /// Truth-table document, JSON {"n":..,"m":..,"table":[..]}
    #[arg(long)]
    function: Option<PathBuf>,
    /// Amplification rounds: "auto" or an integer (grover)
    #[arg(long, default_value = "auto")]
    iterations: String,
    /// Output file path
    #[arg(long, short)]
    output: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    /// The two-gate Bell pair demo
    Bell,
    DeutschJozsa,
    BernsteinVazirani,
    Simon,
    Grover,
}

pub fn execute(args: ExportArgs, format: Format) -> Result<(), CliError> {
    let circuit = build(&args)?;
    let text = match format {
        Format::Qasm => circuit.to_qasm()?,
        Format::CircuitJson => circuit.to_json(),
    };
    std::fs::write(&args.output, text)?;
    Ok(())
}

fn build(args: &ExportArgs) -> Result<Circuit, CliError> {
    match args.target {
        Target::Bell => {
            let mut circuit = Circuit::new(2);
            circuit.push(Gate::H { target: 0 })?;
            circuit.push(Gate::Cnot {
                control: 0,
                target: 1,
            })?;
            Ok(circuit)
        }
        Target::DeutschJozsa => Ok(deutsch_jozsa_circuit(&load_function(args)?)?),
        Target::BernsteinVazirani => {
            let n = require_qubits(args)?;
            let secret = args
                .secret
                .ok_or_else(|| CliError::Usage("--secret <integer> is required".into()))?;
            Ok(bernstein_vazirani_circuit(secret, n)?)
        }
        Target::Simon => Ok(simon_circuit(&load_function(args)?)?),
        Target::Grover => {
            let n = require_qubits(args)?;
            if args.marked.is_empty() {
                return Err(CliError::Usage(
                    "--marked <indices> is required for grover".into(),
                ));
            }
            let good = GoodSet::from_indices(1usize << n, args.marked.iter().copied())?;
            let problem = AmplificationProblem::uniform(n, good)?;
            let iterations = if args.iterations.eq_ignore_ascii_case("auto") {
                Iterations::Auto
            } else {
                args.iterations.parse::<u64>().map(Iterations::Fixed).map_err(|_| {
                    CliError::Usage(format!(
                        "--iterations must be \"auto\" or an integer, got {:?}",
                        args.iterations
                    ))
                })?
            };
            Ok(amplitude_amplify_circuit(&problem, iterations)?)
        }
    }
}

fn require_qubits(args: &ExportArgs) -> Result<usize, CliError> {
    args.qubits
        .ok_or_else(|| CliError::Usage("--qubits is required for this target".into()))
}

fn load_function(args: &ExportArgs) -> Result<BooleanFunction, CliError> {
    let path = args
        .function
        .as_ref()
        .ok_or_else(|| CliError::Usage("--function <path> is required for this target".into()))?;
    let text = std::fs::read_to_string(path)?;
    Ok(BooleanFunction::from_json_str(&text)?)
}
