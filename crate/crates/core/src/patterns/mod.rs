//! The pattern operations: composable building blocks for assembling
//! quantum algorithms, each usable in two modes — applied directly to a
//! state, or emitted as a tagged circuit fragment (`*_circuit`) whose
//! simulation reproduces the direct application.

pub mod amplify;
pub mod boolean;
pub mod catalog;
pub mod entangle;
pub mod init;
pub mod oracle;
pub mod phase;
pub mod superposition;
pub mod table;
pub mod uncompute;
pub mod verify;

pub use amplify::{
    amplitude_amplify, amplitude_amplify_circuit, good_mass, grover_operator,
    grover_operator_circuit, optimal_iterations, AmplificationProblem, Iterations,
};
pub use boolean::BooleanFunction;
pub use catalog::{find_pattern, pattern_catalog, pattern_graph, PatternDoc, PatternLink};
pub use entangle::{create_entanglement, entanglement_circuit, EntanglementOutcome};
pub use init::{initialize, initialize_circuit, InitMode};
pub use oracle::{apply_oracle, synthesize_oracle, Oracle};
pub use phase::{phase_shift, phase_shift_circuit, GoodSet, PhaseAngle, PhaseShiftSpec};
pub use superposition::{uniform_superposition, uniform_superposition_circuit};
pub use table::{
    function_table, function_table_circuit, phase_kickback_circuit, phase_kickback_table,
};
pub use uncompute::{uncompute, uncompute_circuit};
pub use verify::{default_max_rounds, search_by_verification, SearchOutcome, Verifier};
