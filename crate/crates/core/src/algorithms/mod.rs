//! Reference algorithms assembled from the pattern operations, with
//! instrumented hybrid run reports.

pub mod bernstein_vazirani;
pub mod deutsch_jozsa;
pub mod gf2;
pub mod grover;
pub mod simon;

use std::collections::BTreeMap;

use serde::Serialize;

pub use bernstein_vazirani::{bernstein_vazirani, bernstein_vazirani_circuit, BvOutcome};
pub use deutsch_jozsa::{
    deutsch_jozsa, deutsch_jozsa_circuit, deutsch_jozsa_state, DjClassification, DjOutcome,
};
pub use gf2::{gf2_nullspace, Gf2System};
pub use grover::{grover_search, GroverSpec, GroverTarget};
pub use simon::{simon, simon_circuit, validate_simon_promise};

/// Instrumented record of a hybrid quantum-classical run. Invocation counts
/// are exact tallies of oracle applications, not estimates, and every
/// reported answer has been re-verified classically before being returned.
#[derive(Debug, Clone, Serialize)]
pub struct HybridRunReport {
    pub algorithm: String,
    pub preprocessing: String,
    pub quantum_invocations: u64,
    pub postprocessing: String,
    pub answer: String,
    pub seed: u64,
    pub shots: u64,
    /// Histogram of sampled outcomes, keyed by bitstring.
    pub counts: BTreeMap<String, u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub success_frequency: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub iterations: Option<u64>,
}
