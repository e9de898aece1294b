//! Secret-mask recovery from the inner-product oracle f(x) = a.x mod 2,
//! with a single query. The same kickback pipeline as constant-balanced
//! classification returns the mask itself as the measurement outcome.

use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::patterns::{
    apply_oracle, initialize, initialize_circuit, synthesize_oracle, uniform_superposition,
    uniform_superposition_circuit, BooleanFunction, InitMode,
};
use crate::rng::SimRng;
use crate::sim::{format_bits, RegisterLayout};

#[derive(Debug, Clone)]
pub struct BvOutcome {
    pub recovered: u64,
    pub recovered_bits: String,
    pub oracle_invocations: u64,
}

/// The inner-product truth table for a given secret.
pub fn secret_table(secret: u64, n: usize) -> Result<BooleanFunction> {
    if n == 0 || secret >= 1u64 << n {
        return Err(Error::BadBitstring {
            given: format!("{secret:b}"),
            expected: n,
        });
    }
    BooleanFunction::from_fn(n, 1, |x| u64::from((secret & x).count_ones() % 2 == 1))
}

pub fn bernstein_vazirani(secret: u64, n: usize, rng: &mut SimRng) -> Result<BvOutcome> {
    let f = secret_table(secret, n)?;
    let layout = RegisterLayout::with_workspace(n, 1)?;
    let state = initialize(&layout, &InitMode::IndicatorAncilla)?;
    let state = uniform_superposition(state, &layout.all_qubits())?;
    let state = apply_oracle(state, &synthesize_oracle(&f))?;
    let state = uniform_superposition(state, &layout.computational_qubits())?;
    let (recovered, _) = state.measure_subset(&layout.computational_qubits(), rng)?;

    // re-verify the answer against the truth table
    for x in 0..1u64 << n {
        let parity = u64::from((recovered & x).count_ones() % 2 == 1);
        if f.evaluate(x) != parity {
            return Err(Error::HiddenShiftPromise {
                reason: format!("recovered mask {recovered:b} fails at input {x:b}"),
            });
        }
    }
    Ok(BvOutcome {
        recovered,
        recovered_bits: format_bits(recovered, n),
        oracle_invocations: 1,
    })
}

pub fn bernstein_vazirani_circuit(secret: u64, n: usize) -> Result<Circuit> {
    let f = secret_table(secret, n)?;
    let layout = RegisterLayout::with_workspace(n, 1)?;
    let mut circuit = initialize_circuit(&layout, &InitMode::IndicatorAncilla)?;
    circuit.extend(&uniform_superposition_circuit(
        layout.total_qubits(),
        &layout.all_qubits(),
    )?)?;
    circuit.extend(synthesize_oracle(&f).action())?;
    circuit.extend(&uniform_superposition_circuit(
        layout.total_qubits(),
        &layout.computational_qubits(),
    )?)?;
    Ok(circuit)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_secret() {
        let mut rng = SimRng::seed_from_u64(42);
        let outcome = bernstein_vazirani(0, 3, &mut rng).unwrap();
        assert_eq!(outcome.recovered, 0);
        assert_eq!(outcome.recovered_bits, "000");
    }

    #[test]
    fn recovers_101_deterministically() {
        for seed in 0..8 {
            let mut rng = SimRng::seed_from_u64(seed);
            let outcome = bernstein_vazirani(0b101, 3, &mut rng).unwrap();
            assert_eq!(outcome.recovered, 0b101);
            assert_eq!(outcome.recovered_bits, "101");
            assert_eq!(outcome.oracle_invocations, 1);
        }
    }

    #[test]
    fn exhaustive_small_secrets() {
        let mut rng = SimRng::seed_from_u64(1);
        for n in 1..=4usize {
            for secret in 0..1u64 << n {
                let outcome = bernstein_vazirani(secret, n, &mut rng).unwrap();
                assert_eq!(outcome.recovered, secret);
            }
        }
    }

    #[test]
    fn secret_must_fit() {
        let mut rng = SimRng::seed_from_u64(1);
        assert!(bernstein_vazirani(8, 3, &mut rng).is_err());
    }
}
