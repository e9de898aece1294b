//! Function tables and phase kickback.
//!
//! The function-table state evaluates f on every input with one oracle
//! application: superpose the input register, then apply the XOR oracle,
//! leaving `2^(-n/2) sum_x |x>|f(x)>`. For an indicator function with the
//! ancilla prepared in |->, the same oracle instead writes f into the sign
//! of each input amplitude (phase kickback).

use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::patterns::boolean::BooleanFunction;
use crate::patterns::init::{initialize, initialize_circuit, InitMode};
use crate::patterns::oracle::{apply_oracle, synthesize_oracle, Oracle};
use crate::patterns::superposition::{uniform_superposition, uniform_superposition_circuit};
use crate::sim::{RegisterLayout, StateVector};

fn table_layout(f: &BooleanFunction) -> RegisterLayout {
    RegisterLayout::with_workspace(f.n(), f.m()).expect("n >= 1 by construction")
}

/// `2^(-n/2) sum_x |x>|f(x)>` on an (n+m)-qubit register.
pub fn function_table(f: &BooleanFunction) -> Result<StateVector> {
    let layout = table_layout(f);
    let state = initialize(&layout, &InitMode::AllZeros)?;
    let state = uniform_superposition(state, &layout.computational_qubits())?;
    apply_oracle(state, &synthesize_oracle(f))
}

pub fn function_table_circuit(f: &BooleanFunction) -> Result<Circuit> {
    let layout = table_layout(f);
    let mut circuit = initialize_circuit(&layout, &InitMode::AllZeros)?;
    circuit.extend(&uniform_superposition_circuit(
        layout.total_qubits(),
        &layout.computational_qubits(),
    )?)?;
    circuit.extend(synthesize_oracle(f).action())?;
    Ok(circuit)
}

/// `(2^(-n/2) sum_x (-1)^f(x) |x>) (x) |->` for an indicator function,
/// produced with a single oracle application.
pub fn phase_kickback_table(f: &BooleanFunction) -> Result<StateVector> {
    let oracle = kickback_oracle(f)?;
    let layout = table_layout(f);
    let state = initialize(&layout, &InitMode::IndicatorAncilla)?;
    let state = uniform_superposition(state, &layout.all_qubits())?;
    apply_oracle(state, &oracle)
}

pub fn phase_kickback_circuit(f: &BooleanFunction) -> Result<Circuit> {
    let oracle = kickback_oracle(f)?;
    let layout = table_layout(f);
    let mut circuit = initialize_circuit(&layout, &InitMode::IndicatorAncilla)?;
    circuit.extend(&uniform_superposition_circuit(
        layout.total_qubits(),
        &layout.all_qubits(),
    )?)?;
    circuit.extend(oracle.action())?;
    Ok(circuit)
}

fn kickback_oracle(f: &BooleanFunction) -> Result<Oracle> {
    if f.m() != 1 {
        return Err(Error::NotIndicator { m: f.m() });
    }
    Ok(synthesize_oracle(f))
}
