//! Uniform superposition via Hadamard fan-out.

use crate::circuit::Circuit;
use crate::error::Result;
use crate::sim::{Gate, StateVector};

/// Apply a Hadamard to each listed qubit. On |0...0> restricted to those
/// qubits this produces the equal-weight superposition with amplitude
/// `2^(-k/2)` on each of the `2^k` relevant basis states.
pub fn uniform_superposition(state: StateVector, qubits: &[usize]) -> Result<StateVector> {
    let mut state = state;
    for &q in qubits {
        state = state.apply(&Gate::H { target: q })?;
    }
    Ok(state)
}

/// The recorded form: one H per listed qubit, in the order given.
pub fn uniform_superposition_circuit(num_qubits: usize, qubits: &[usize]) -> Result<Circuit> {
    let mut circuit = Circuit::new(num_qubits);
    for &q in qubits {
        circuit.push_tagged(Gate::H { target: q }, Some("uniform-superposition"))?;
    }
    Ok(circuit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn two_qubit_uniform() {
        let s = uniform_superposition(StateVector::zero(2).unwrap(), &[0, 1]).unwrap();
        for index in 0..4 {
            assert!((s.amplitude(index).re - 0.5).abs() < 1e-12);
            assert!(s.amplitude(index).im.abs() < 1e-15);
        }
    }

    #[test]
    fn applying_twice_restores_zeros() {
        let s = StateVector::zero(3).unwrap();
        let round_trip =
            uniform_superposition(uniform_superposition(s, &[0, 1, 2]).unwrap(), &[0, 1, 2])
                .unwrap();
        assert!((round_trip.probability(0) - 1.0).abs() < 1e-12);
        assert!(round_trip.equals_within(&StateVector::zero(3).unwrap(), 1e-12));
    }

    #[test]
    fn ancilla_in_one_becomes_minus() {
        // |00>|1> with the ancilla on qubit 0, H on everything
        let s = StateVector::basis(3, 1).unwrap();
        let s = uniform_superposition(s, &[0, 1, 2]).unwrap();
        let amp = 1.0 / 8f64.sqrt();
        for basis in 0..8u64 {
            let sign = if basis & 1 == 1 { -1.0 } else { 1.0 };
            assert!((s.amplitude(basis).re - sign * amp).abs() < 1e-12, "{basis}");
        }
    }

    #[test]
    fn invalid_index_rejected() {
        let err =
            uniform_superposition(StateVector::zero(1).unwrap(), &[3]).unwrap_err();
        assert!(matches!(err, Error::QubitOutOfRange { index: 3, .. }));
    }
}
