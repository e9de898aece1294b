//! Born-rule measurement and shot sampling.
//!
//! Outcomes are drawn by walking the cumulative probability with a single
//! unit-interval draw from [`SimRng`](crate::rng::SimRng), so a fixed seed
//! reproduces shot counts exactly. Measuring every qubit goes through the
//! same code path as a subset measurement of all qubits.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::rng::SimRng;
use crate::sim::state::StateVector;

impl StateVector {
    /// Measure all qubits. Returns the observed basis index and the
    /// collapsed (basis) state.
    pub fn measure_all(self, rng: &mut SimRng) -> (u64, StateVector) {
        let all: Vec<usize> = (0..self.num_qubits()).collect();
        self.measure_subset(&all, rng)
            .expect("full-register measurement cannot fail")
    }

    /// Measure the listed qubits. The outcome packs the measured qubits in
    /// ascending order, lowest listed qubit at bit 0; the returned state is
    /// the renormalized post-measurement state on all qubits.
    pub fn measure_subset(
        mut self,
        qubits: &[usize],
        rng: &mut SimRng,
    ) -> Result<(u64, StateVector)> {
        if qubits.is_empty() {
            return Err(Error::EmptyMeasurement);
        }
        let n = self.num_qubits();
        let mut sorted = qubits.to_vec();
        sorted.sort_unstable();
        for (pos, &q) in sorted.iter().enumerate() {
            if q >= n {
                return Err(Error::QubitOutOfRange {
                    index: q,
                    num_qubits: n,
                });
            }
            if pos > 0 && sorted[pos - 1] == q {
                return Err(Error::DuplicateTarget { index: q });
            }
        }

        let marginal = marginal_probabilities(self.amplitudes(), &sorted);
        let outcome = draw(&marginal, rng.next_unit());

        // Collapse: zero out amplitudes disagreeing with the outcome.
        for (b, a) in self.amplitudes_mut().iter_mut().enumerate() {
            if extract(b, &sorted) != outcome {
                *a = Complex64::ZERO;
            }
        }
        self.renormalize();
        Ok((outcome as u64, self))
    }

    /// Histogram of `shots` independent full-register measurements of this
    /// state. The state is not collapsed.
    pub fn sample_counts(&self, shots: u64, rng: &mut SimRng) -> BTreeMap<u64, u64> {
        let probs: Vec<f64> = self.amplitudes().iter().map(|a| a.norm_sqr()).collect();
        let mut counts = BTreeMap::new();
        for _ in 0..shots {
            let outcome = draw(&probs, rng.next_unit()) as u64;
            *counts.entry(outcome).or_insert(0) += 1;
        }
        counts
    }
}

fn marginal_probabilities(amps: &[Complex64], sorted_qubits: &[usize]) -> Vec<f64> {
    let mut probs = vec![0.0; 1 << sorted_qubits.len()];
    for (b, a) in amps.iter().enumerate() {
        probs[extract(b, sorted_qubits)] += a.norm_sqr();
    }
    probs
}

#[inline]
fn extract(basis: usize, sorted_qubits: &[usize]) -> usize {
    let mut value = 0;
    for (j, &q) in sorted_qubits.iter().enumerate() {
        value |= ((basis >> q) & 1) << j;
    }
    value
}

/// Cumulative-sum inversion of a probability table. The final bucket absorbs
/// floating-point residue.
fn draw(probs: &[f64], unit: f64) -> usize {
    let mut acc = 0.0;
    for (index, p) in probs.iter().enumerate() {
        acc += p;
        if unit < acc {
            return index;
        }
    }
    probs.len() - 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::gate::Gate;

    #[test]
    fn basis_state_measures_itself() {
        for seed in [0u64, 1, 42, 12345] {
            let mut rng = SimRng::seed_from_u64(seed);
            let s = StateVector::basis(3, 0b101).unwrap();
            let (outcome, collapsed) = s.measure_all(&mut rng);
            assert_eq!(outcome, 0b101);
            assert_eq!(collapsed.bit_label(outcome), "101");
            assert!((collapsed.probability(0b101) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn plus_state_counts_within_four_sigma() {
        let s = StateVector::zero(1)
            .unwrap()
            .apply(&Gate::H { target: 0 })
            .unwrap();
        let mut rng = SimRng::seed_from_u64(42);
        let counts = s.sample_counts(4096, &mut rng);
        // binomial(4096, 1/2): sigma = 32, four sigma = 128
        for outcome in [0u64, 1] {
            let c = *counts.get(&outcome).unwrap_or(&0) as f64;
            assert!((c - 2048.0).abs() <= 128.0, "outcome {outcome}: {c}");
        }
    }

    #[test]
    fn fixed_seed_reproduces_counts() {
        let s = StateVector::zero(2)
            .unwrap()
            .apply(&Gate::H { target: 0 })
            .unwrap()
            .apply(&Gate::H { target: 1 })
            .unwrap();
        let mut a = SimRng::seed_from_u64(42);
        let mut b = SimRng::seed_from_u64(42);
        assert_eq!(s.sample_counts(2000, &mut a), s.sample_counts(2000, &mut b));
    }

    #[test]
    fn bell_state_subset_measurement_correlates() {
        let mut zeros = 0;
        let mut ones = 0;
        for seed in 0..200 {
            let bell = StateVector::zero(2)
                .unwrap()
                .apply(&Gate::H { target: 0 })
                .unwrap()
                .apply(&Gate::Cnot {
                    control: 0,
                    target: 1,
                })
                .unwrap();
            let mut rng = SimRng::seed_from_u64(seed);
            let (outcome, collapsed) = bell.measure_subset(&[1], &mut rng).unwrap();
            match outcome {
                0 => {
                    zeros += 1;
                    assert!((collapsed.probability(0b00) - 1.0).abs() < 1e-12);
                }
                1 => {
                    ones += 1;
                    assert!((collapsed.probability(0b11) - 1.0).abs() < 1e-12);
                }
                other => panic!("impossible outcome {other}"),
            }
            assert!((collapsed.norm() - 1.0).abs() < 1e-10);
        }
        // each branch has probability 1/2; 200 tries make misses astronomically rare
        assert!(zeros > 0 && ones > 0);
    }

    #[test]
    fn empty_subset_rejected() {
        let s = StateVector::zero(1).unwrap();
        let mut rng = SimRng::seed_from_u64(0);
        assert!(matches!(
            s.measure_subset(&[], &mut rng),
            Err(Error::EmptyMeasurement)
        ));
    }

    #[test]
    fn measuring_all_qubits_matches_measure_all_path() {
        let s = StateVector::zero(2)
            .unwrap()
            .apply(&Gate::H { target: 0 })
            .unwrap()
            .apply(&Gate::H { target: 1 })
            .unwrap();
        // same seed, same code path: outcomes agree draw for draw
        for seed in 0..32 {
            let mut a = SimRng::seed_from_u64(seed);
            let mut b = SimRng::seed_from_u64(seed);
            let (x, _) = s.clone().measure_all(&mut a);
            let (y, _) = s.clone().measure_subset(&[0, 1], &mut b).unwrap();
            assert_eq!(x, y);
        }
    }
}
