//! The `run` subcommand: execute an algorithm and emit a report, as text or
//! as a single versioned JSON document on stdout.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, ValueEnum};
use serde::Serialize;

use qpatterns::algorithms::{
    bernstein_vazirani, deutsch_jozsa, deutsch_jozsa_state, grover_search, simon,
    DjClassification, GroverSpec, GroverTarget, HybridRunReport,
};
use qpatterns::patterns::Iterations;
use qpatterns::sim::format_bits;
use qpatterns::{BooleanFunction, SimRng};

use crate::CliError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Args)]
pub struct RunArgs {
    /// Algorithm to run
    #[arg(value_enum)]
    algorithm: Algorithm,
    /// Width of the computational register
    #[arg(long)]
    qubits: Option<usize>,
    /// Marked basis indices, comma separated (grover)
    #[arg(long, value_delimiter = ',')]
    marked: Vec<u64>,
    /// Treat the solution count as unknown: verifier-driven schedule (grover)
    #[arg(long)]
    unknown_count: bool,
    /// Secret mask as an integer (bernstein-vazirani)
    #[arg(long)]
    secret: Option<u64>,
    /// Truth-table document, JSON {"n":..,"m":..,"table":[..]}
    #[arg(long)]
    function: Option<PathBuf>,
    /// Measurement shots for the outcome histogram
    #[arg(long, default_value_t = 1024)]
    shots: u64,
    /// RNG seed; drawn from system entropy (and reported) when omitted
    #[arg(long)]
    seed: Option<u64>,
    /// Amplification rounds: "auto" or an integer (grover)
    #[arg(long, default_value = "auto")]
    iterations: String,
    /// Round budget for the unknown-count schedule (grover)
    #[arg(long)]
    max_rounds: Option<u64>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algorithm {
    Grover,
    DeutschJozsa,
    BernsteinVazirani,
    Simon,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

/// The versioned structured run document.
#[derive(Serialize)]
struct RunDocument {
    schema_version: u32,
    algorithm: String,
    parameters: BTreeMap<String, String>,
    seed: u64,
    shots: u64,
    counts: BTreeMap<String, u64>,
    success_frequency: Option<f64>,
    oracle_invocations: u64,
    iterations: Option<u64>,
    answer: String,
}

pub fn execute(args: RunArgs) -> Result<(), CliError> {
    if args.shots == 0 {
        return Err(CliError::Usage("--shots must be at least 1".into()));
    }
    let seed = args.seed.unwrap_or_else(entropy_seed);
    let document = match args.algorithm {
        Algorithm::Grover => run_grover(&args, seed)?,
        Algorithm::DeutschJozsa => run_deutsch_jozsa(&args, seed)?,
        Algorithm::BernsteinVazirani => run_bernstein_vazirani(&args, seed)?,
        Algorithm::Simon => run_simon(&args, seed)?,
    };
    match args.format {
        OutputFormat::Json => println!(
            "{}",
            serde_json::to_string_pretty(&document).expect("report serialization cannot fail")
        ),
        OutputFormat::Text => print_text(&document),
    }
    Ok(())
}

fn entropy_seed() -> u64 {
    use std::io::Read;
    let mut buf = [0u8; 8];
    if std::fs::File::open("/dev/urandom")
        .and_then(|mut f| f.read_exact(&mut buf))
        .is_ok()
    {
        return u64::from_le_bytes(buf);
    }
    use std::time::{SystemTime, UNIX_EPOCH};
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_nanos() as u64)
        .unwrap_or(0)
        ^ u64::from(std::process::id())
}

fn require_qubits(args: &RunArgs) -> Result<usize, CliError> {
    args.qubits
        .ok_or_else(|| CliError::Usage("--qubits is required for this algorithm".into()))
}

fn load_function(args: &RunArgs) -> Result<BooleanFunction, CliError> {
    let path = args
        .function
        .as_ref()
        .ok_or_else(|| CliError::Usage("--function <path> is required for this algorithm".into()))?;
    let text = std::fs::read_to_string(path)?;
    Ok(BooleanFunction::from_json_str(&text)?)
}

fn parse_iterations(text: &str) -> Result<Iterations, CliError> {
    if text.eq_ignore_ascii_case("auto") {
        return Ok(Iterations::Auto);
    }
    text.parse::<u64>()
        .map(Iterations::Fixed)
        .map_err(|_| CliError::Usage(format!("--iterations must be \"auto\" or an integer, got {text:?}")))
}

fn from_report(report: HybridRunReport, parameters: BTreeMap<String, String>) -> RunDocument {
    RunDocument {
        schema_version: SCHEMA_VERSION,
        algorithm: report.algorithm,
        parameters,
        seed: report.seed,
        shots: report.shots,
        counts: report.counts,
        success_frequency: report.success_frequency,
        oracle_invocations: report.quantum_invocations,
        iterations: report.iterations,
        answer: report.answer,
    }
}

fn run_grover(args: &RunArgs, seed: u64) -> Result<RunDocument, CliError> {
    let n = require_qubits(args)?;
    if args.marked.is_empty() {
        return Err(CliError::Usage(
            "--marked <indices> is required for grover".into(),
        ));
    }
    let mut parameters = BTreeMap::new();
    parameters.insert("qubits".into(), n.to_string());
    parameters.insert(
        "marked".into(),
        args.marked
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(","),
    );
    let target = if args.unknown_count {
        parameters.insert("mode".into(), "unknown-count".into());
        let marked: std::collections::BTreeSet<u64> = args.marked.iter().copied().collect();
        GroverTarget::Verifier(Arc::new(move |x| marked.contains(&x)))
    } else {
        parameters.insert("mode".into(), "known-count".into());
        GroverTarget::Marked(args.marked.iter().copied().collect())
    };
    let spec = GroverSpec {
        n,
        target,
        iterations: parse_iterations(&args.iterations)?,
        shots: args.shots,
        seed,
        max_rounds: args.max_rounds,
    };
    Ok(from_report(grover_search(&spec)?, parameters))
}

fn run_deutsch_jozsa(args: &RunArgs, seed: u64) -> Result<RunDocument, CliError> {
    let f = load_function(args)?;
    let mut rng = SimRng::seed_from_u64(seed);
    let outcome = deutsch_jozsa(&f, &mut rng)?;
    let answer = match outcome.classification {
        DjClassification::Constant => "constant",
        DjClassification::Balanced => "balanced",
    };
    // histogram over the computational register of the final pipeline state;
    // the single oracle application already happened above
    let counts =
        computational_histogram(&deutsch_jozsa_state(&f)?, f.n(), args.shots, &mut rng);
    let mut parameters = BTreeMap::new();
    parameters.insert("n".into(), f.n().to_string());
    parameters.insert(
        "function".into(),
        args.function.as_ref().unwrap().display().to_string(),
    );
    Ok(RunDocument {
        schema_version: SCHEMA_VERSION,
        algorithm: "deutsch-jozsa".into(),
        parameters,
        seed,
        shots: args.shots,
        counts,
        success_frequency: Some(1.0),
        oracle_invocations: outcome.oracle_invocations,
        iterations: None,
        answer: answer.into(),
    })
}

fn run_bernstein_vazirani(args: &RunArgs, seed: u64) -> Result<RunDocument, CliError> {
    let n = require_qubits(args)?;
    let secret = args
        .secret
        .ok_or_else(|| CliError::Usage("--secret <integer> is required".into()))?;
    let mut rng = SimRng::seed_from_u64(seed);
    let outcome = bernstein_vazirani(secret, n, &mut rng)?;
    let mut counts = BTreeMap::new();
    counts.insert(outcome.recovered_bits.clone(), args.shots);
    let mut parameters = BTreeMap::new();
    parameters.insert("qubits".into(), n.to_string());
    parameters.insert("secret".into(), secret.to_string());
    Ok(RunDocument {
        schema_version: SCHEMA_VERSION,
        algorithm: "bernstein-vazirani".into(),
        parameters,
        seed,
        shots: args.shots,
        counts,
        success_frequency: Some(1.0),
        oracle_invocations: outcome.oracle_invocations,
        iterations: None,
        answer: outcome.recovered_bits,
    })
}

fn run_simon(args: &RunArgs, seed: u64) -> Result<RunDocument, CliError> {
    let f = load_function(args)?;
    let mut parameters = BTreeMap::new();
    parameters.insert("n".into(), f.n().to_string());
    parameters.insert(
        "function".into(),
        args.function.as_ref().unwrap().display().to_string(),
    );
    Ok(from_report(simon(&f, seed)?, parameters))
}

/// Histogram of the computational register (the high `n` qubits) over
/// repeated full-register samples.
fn computational_histogram(
    state: &qpatterns::StateVector,
    n: usize,
    shots: u64,
    rng: &mut SimRng,
) -> BTreeMap<String, u64> {
    let low = state.num_qubits() - n;
    let mut folded = BTreeMap::new();
    for (outcome, count) in state.sample_counts(shots, rng) {
        *folded.entry(format_bits(outcome >> low, n)).or_insert(0) += count;
    }
    folded
}

fn print_text(doc: &RunDocument) {
    println!("algorithm: {}", doc.algorithm);
    let params: Vec<String> = doc
        .parameters
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect();
    println!("parameters: {}", params.join(" "));
    println!("seed: {}", doc.seed);
    println!("shots: {}", doc.shots);
    println!("oracle invocations: {}", doc.oracle_invocations);
    if let Some(k) = doc.iterations {
        println!("iterations: {k}");
    }
    if let Some(freq) = doc.success_frequency {
        println!("success frequency: {freq}");
    }
    println!("answer: {}", doc.answer);
    if !doc.counts.is_empty() {
        println!("counts:");
        for (bits, count) in &doc.counts {
            println!("  {bits}  {count}");
        }
    }
}
