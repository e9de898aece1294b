//! A composable library of quantum-algorithm building blocks on a dense
//! state-vector simulator.
//!
//! The crate is layered bottom-up:
//!
//! * [`sim`] — state vectors, register layouts, gates, measurement and
//!   separability analysis;
//! * [`circuit`] — a recorded-circuit IR with inversion and OpenQASM 2.0
//!   export;
//! * [`patterns`] — the building-block operations (initialization, uniform
//!   superposition, entanglement creation, function tables and kickback,
//!   oracles, uncompute, phase shifts, amplitude amplification,
//!   verifier-driven search) plus the shipped pattern catalog;
//! * [`algorithms`] — reference algorithms assembled from those blocks
//!   with instrumented hybrid run reports.
//!
//! Bit convention, used everywhere: qubit `i` contributes `2^i` to a basis
//! index, bitstrings print the highest qubit leftmost, and multi-register
//! layouts stack the computational register on the high qubits.

pub mod algorithms;
pub mod circuit;
pub mod error;
pub mod patterns;
pub mod rng;
pub mod sim;

pub use circuit::{Circuit, GateOp, Op};
pub use error::{Error, Result};
pub use patterns::{
    AmplificationProblem, BooleanFunction, GoodSet, InitMode, Iterations, Oracle, PatternDoc,
    PhaseShiftSpec,
};
pub use rng::SimRng;
pub use sim::{format_bits, Gate, RegisterLayout, StateVector, DEFAULT_QUBIT_CAP};

pub use algorithms::HybridRunReport;
