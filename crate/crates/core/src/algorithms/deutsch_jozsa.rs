//! Constant-versus-balanced classification with one oracle query.
//!
//! Pipeline: indicator-ancilla initialization, Hadamards on the whole
//! register, one oracle application, Hadamards on the computational
//! register, then a computational-register measurement. Under the promise
//! the outcome is all-zeros exactly for constant functions, with
//! probability 1.

use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::patterns::{
    apply_oracle, initialize, initialize_circuit, synthesize_oracle, uniform_superposition,
    uniform_superposition_circuit, BooleanFunction, InitMode,
};
use crate::rng::SimRng;
use crate::sim::{format_bits, RegisterLayout, StateVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DjClassification {
    Constant,
    Balanced,
}

#[derive(Debug, Clone)]
pub struct DjOutcome {
    pub classification: DjClassification,
    /// Measured computational-register bitstring.
    pub measured: String,
    pub oracle_invocations: u64,
}

/// Reject inputs violating the constant-or-balanced promise.
pub fn validate_promise(f: &BooleanFunction) -> Result<()> {
    if f.m() != 1 {
        return Err(Error::NotIndicator { m: f.m() });
    }
    let ones = f.table().iter().filter(|&&v| v == 1).count();
    let size = f.domain_size();
    if ones != 0 && ones != size && ones * 2 != size {
        return Err(Error::NotConstantOrBalanced { ones, size });
    }
    Ok(())
}

pub fn deutsch_jozsa(f: &BooleanFunction, rng: &mut SimRng) -> Result<DjOutcome> {
    validate_promise(f)?;
    let layout = RegisterLayout::with_workspace(f.n(), 1)?;
    let state = initialize(&layout, &InitMode::IndicatorAncilla)?;
    let state = uniform_superposition(state, &layout.all_qubits())?;
    let state = apply_oracle(state, &synthesize_oracle(f))?;
    let state = uniform_superposition(state, &layout.computational_qubits())?;
    let (outcome, _) = state.measure_subset(&layout.computational_qubits(), rng)?;
    let classification = if outcome == 0 {
        DjClassification::Constant
    } else {
        DjClassification::Balanced
    };
    Ok(DjOutcome {
        classification,
        measured: format_bits(outcome, f.n()),
        oracle_invocations: 1,
    })
}

/// The unitary pipeline (everything before the final measurement).
pub fn deutsch_jozsa_circuit(f: &BooleanFunction) -> Result<Circuit> {
    validate_promise(f)?;
    let layout = RegisterLayout::with_workspace(f.n(), 1)?;
    let mut circuit = initialize_circuit(&layout, &InitMode::IndicatorAncilla)?;
    circuit.extend(&uniform_superposition_circuit(
        layout.total_qubits(),
        &layout.all_qubits(),
    )?)?;
    circuit.extend(synthesize_oracle(f).action())?;
    circuit.extend(&uniform_superposition_circuit(
        layout.total_qubits(),
        &layout.computational_qubits(),
    )?)?;
    Ok(circuit)
}

/// Final pipeline state, for shot sampling without re-running the oracle.
pub fn deutsch_jozsa_state(f: &BooleanFunction) -> Result<StateVector> {
    validate_promise(f)?;
    let layout = RegisterLayout::with_workspace(f.n(), 1)?;
    let state = initialize(&layout, &InitMode::IndicatorAncilla)?;
    let state = uniform_superposition(state, &layout.all_qubits())?;
    let state = apply_oracle(state, &synthesize_oracle(f))?;
    uniform_superposition(state, &layout.computational_qubits())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_one_reads_all_zeros() {
        let f = BooleanFunction::from_fn(2, 1, |_| 1).unwrap();
        let mut rng = SimRng::seed_from_u64(42);
        let outcome = deutsch_jozsa(&f, &mut rng).unwrap();
        assert_eq!(outcome.classification, DjClassification::Constant);
        assert_eq!(outcome.measured, "00");
        assert_eq!(outcome.oracle_invocations, 1);
    }

    #[test]
    fn projection_function_reads_its_mask() {
        // f(x) = x0 is balanced; the final measurement is deterministically 01
        let f = BooleanFunction::from_fn(2, 1, |x| x & 1).unwrap();
        for seed in 0..16 {
            let mut rng = SimRng::seed_from_u64(seed);
            let outcome = deutsch_jozsa(&f, &mut rng).unwrap();
            assert_eq!(outcome.classification, DjClassification::Balanced);
            assert_eq!(outcome.measured, "01");
        }
    }

    #[test]
    fn promise_violation_is_an_input_error() {
        let f = BooleanFunction::new(2, 1, vec![1, 0, 0, 0]).unwrap();
        let mut rng = SimRng::seed_from_u64(0);
        assert!(matches!(
            deutsch_jozsa(&f, &mut rng),
            Err(Error::NotConstantOrBalanced { ones: 1, size: 4 })
        ));
    }

    #[test]
    fn n1_identity_circuit_contains_one_cx() {
        let f = BooleanFunction::from_fn(1, 1, |x| x).unwrap();
        let circuit = deutsch_jozsa_circuit(&f).unwrap();
        let cx_count = circuit
            .ops()
            .iter()
            .filter(|op| op.op.name() == "cnot")
            .count();
        assert_eq!(cx_count, 1);
    }
}
