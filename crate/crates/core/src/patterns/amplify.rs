//! Amplitude amplification.
//!
//! Given a measurement-free preparation circuit U and a good set G, one
//! amplification round applies, in order: a sign flip on G, the inverse of
//! U, a sign flip on the all-zeros state, U again, and a global factor of
//! -1. Writing a = |P_G U|0>| and theta = asin(a), the good-set probability
//! after k rounds is sin^2((2k+1) * theta), and the round count maximizing
//! that first peak is about pi / (4a), a quadratic improvement over the
//! 1/a^2 classical repetition count.

use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::patterns::phase::{phase_shift, phase_shift_circuit, GoodSet, PhaseShiftSpec};
use crate::patterns::superposition::uniform_superposition_circuit;
use crate::sim::{Gate, StateVector};

#[derive(Debug, Clone)]
pub struct AmplificationProblem {
    prepare: Circuit,
    unprepare: Circuit,
    good: GoodSet,
    good_amplitude: f64,
}

impl AmplificationProblem {
    /// Pair a preparation circuit with a good set. The circuit must be
    /// measurement-free; the good set's universe must match its register.
    pub fn new(prepare: Circuit, good: GoodSet) -> Result<Self> {
        let dim = 1usize << prepare.num_qubits();
        if good.universe() != dim {
            return Err(Error::UniverseMismatch {
                universe: good.universe(),
                dim,
            });
        }
        let unprepare = prepare.inverse()?;
        let prepared = prepare.simulate(StateVector::zero(prepare.num_qubits())?)?;
        let good_amplitude = good_mass(&prepared, &good).sqrt().min(1.0);
        Ok(AmplificationProblem {
            prepare,
            unprepare,
            good,
            good_amplitude,
        })
    }

    /// Uniform-superposition preparation over n qubits, the plain search
    /// setting.
    pub fn uniform(n: usize, good: GoodSet) -> Result<Self> {
        let prepare = uniform_superposition_circuit(n, &(0..n).collect::<Vec<_>>())?;
        Self::new(prepare, good)
    }

    pub fn prepare(&self) -> &Circuit {
        &self.prepare
    }

    pub fn good(&self) -> &GoodSet {
        &self.good
    }

    pub fn num_qubits(&self) -> usize {
        self.prepare.num_qubits()
    }

    /// |P_G U|0>|, the length of the prepared state's good component.
    pub fn good_amplitude(&self) -> f64 {
        self.good_amplitude
    }

    /// t, the single-shot success probability of measuring U|0>.
    pub fn success_probability(&self) -> f64 {
        self.good_amplitude * self.good_amplitude
    }

    /// U|0>, the starting point of the iteration.
    pub fn prepared_state(&self) -> Result<StateVector> {
        self.prepare
            .simulate(StateVector::zero(self.num_qubits())?)
    }
}

/// Probability mass of a state on the good set.
pub fn good_mass(state: &StateVector, good: &GoodSet) -> f64 {
    (0..state.dim() as u64)
        .filter(|&x| good.contains(x))
        .map(|x| state.probability(x))
        .sum()
}

/// One amplification round.
pub fn grover_operator(
    problem: &AmplificationProblem,
    state: StateVector,
) -> Result<StateVector> {
    let dim = 1usize << problem.num_qubits();
    if state.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: problem.num_qubits(),
            actual: state.num_qubits(),
        });
    }
    let flip_good = PhaseShiftSpec::pi(problem.good.clone());
    let flip_zero = PhaseShiftSpec::pi(GoodSet::zero_state(dim));

    let state = phase_shift(state, &flip_good)?;
    let state = problem.unprepare.simulate(state)?;
    let state = phase_shift(state, &flip_zero)?;
    let mut state = problem.prepare.simulate(state)?;
    for a in state.amplitudes_mut() {
        *a = -*a;
    }
    Ok(state)
}

/// The recorded form of one round. The sign flips lower to diagonal ops and
/// the global -1 to a one-qubit diagonal with both phases pi, so the
/// fragment is simulation-only.
pub fn grover_operator_circuit(problem: &AmplificationProblem) -> Result<Circuit> {
    let n = problem.num_qubits();
    let dim = 1usize << n;
    let mut circuit = Circuit::new(n);
    circuit.extend(&phase_shift_circuit(
        n,
        &PhaseShiftSpec::pi(problem.good.clone()),
    )?)?;
    circuit.extend(&problem.unprepare)?;
    circuit.extend(&phase_shift_circuit(
        n,
        &PhaseShiftSpec::pi(GoodSet::zero_state(dim)),
    )?)?;
    circuit.extend(&problem.prepare)?;
    circuit.push_tagged(
        Gate::Diagonal {
            targets: vec![0],
            phases: vec![std::f64::consts::PI, std::f64::consts::PI],
        },
        Some("global-phase"),
    )?;
    Ok(circuit)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Iterations {
    /// Use [`optimal_iterations`].
    Auto,
    Fixed(u64),
}

/// The round count k maximizing sin^2((2k+1) * theta) at the first peak,
/// i.e. the nearest integer to pi/(4*theta) - 1/2, with ties broken toward
/// fewer rounds. Errors when the prepared state has no good component.
pub fn optimal_iterations(problem: &AmplificationProblem) -> Result<u64> {
    let a = problem.good_amplitude();
    if a <= 0.0 {
        return Err(Error::NoSolution);
    }
    let theta = a.min(1.0).asin();
    let estimate = std::f64::consts::PI / (4.0 * theta) - 0.5;
    let below = estimate.floor().max(0.0) as u64;
    let above = estimate.ceil().max(0.0) as u64;
    let value = |k: u64| ((2 * k + 1) as f64 * theta).sin().powi(2);
    // strict inequality keeps the smaller k on ties
    if value(above) > value(below) {
        Ok(above)
    } else {
        Ok(below)
    }
}

/// Apply k amplification rounds to U|0> (k resolved via
/// [`optimal_iterations`] when `Auto`).
pub fn amplitude_amplify(
    problem: &AmplificationProblem,
    iterations: Iterations,
) -> Result<StateVector> {
    let k = match iterations {
        Iterations::Auto => optimal_iterations(problem)?,
        Iterations::Fixed(k) => k,
    };
    let mut state = problem.prepared_state()?;
    for _ in 0..k {
        state = grover_operator(problem, state)?;
    }
    Ok(state)
}

/// The recorded form: U followed by k operator rounds.
pub fn amplitude_amplify_circuit(
    problem: &AmplificationProblem,
    iterations: Iterations,
) -> Result<Circuit> {
    let k = match iterations {
        Iterations::Auto => optimal_iterations(problem)?,
        Iterations::Fixed(k) => k,
    };
    let mut circuit = Circuit::new(problem.num_qubits());
    circuit.extend(problem.prepare())?;
    let round = grover_operator_circuit(problem)?;
    for _ in 0..k {
        circuit.extend(&round)?;
    }
    Ok(circuit)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single_good(n: usize, index: u64) -> AmplificationProblem {
        let dim = 1usize << n;
        AmplificationProblem::uniform(n, GoodSet::from_indices(dim, [index]).unwrap()).unwrap()
    }

    #[test]
    fn good_amplitude_of_uniform_preparations() {
        // U = H tensor H, G = {3}: amplitude 1/2
        assert!((single_good(2, 3).good_amplitude() - 0.5).abs() < 1e-12);
        // U = H^3, G = {5}: amplitude 1/sqrt(8)
        assert!((single_good(3, 5).good_amplitude() - 0.35355339059327373).abs() < 1e-12);
        // U = identity, G = {0}: amplitude 1
        let identity = Circuit::new(1);
        let p =
            AmplificationProblem::new(identity, GoodSet::from_indices(2, [0]).unwrap()).unwrap();
        assert!((p.good_amplitude() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn one_round_on_four_states_is_certain() {
        let problem = single_good(2, 2);
        let state = grover_operator(&problem, problem.prepared_state().unwrap()).unwrap();
        assert!((state.probability(2) - 1.0).abs() < 1e-9);
        assert!((state.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn optimal_iteration_counts() {
        assert_eq!(optimal_iterations(&single_good(2, 1)).unwrap(), 1);
        assert_eq!(optimal_iterations(&single_good(3, 5)).unwrap(), 2);
        let identity = Circuit::new(1);
        let certain =
            AmplificationProblem::new(identity, GoodSet::from_indices(2, [0]).unwrap()).unwrap();
        assert_eq!(optimal_iterations(&certain).unwrap(), 0);
    }

    #[test]
    fn preparation_with_measurement_rejected() {
        let mut prepare = Circuit::new(2);
        prepare.push(Gate::H { target: 0 }).unwrap();
        prepare.push_measure(&[0]).unwrap();
        let err = AmplificationProblem::new(prepare, GoodSet::from_indices(4, [1]).unwrap())
            .unwrap_err();
        assert!(matches!(err, Error::MeasurementPresent { index: 1 }));
    }

    #[test]
    fn empty_good_set_is_an_error_for_auto() {
        let problem =
            AmplificationProblem::uniform(2, GoodSet::from_indices(4, []).unwrap()).unwrap();
        assert!(matches!(
            optimal_iterations(&problem),
            Err(Error::NoSolution)
        ));
        assert!(matches!(
            amplitude_amplify(&problem, Iterations::Auto),
            Err(Error::NoSolution)
        ));
        // fixed round counts still run; the good flip is just the identity
        let state = amplitude_amplify(&problem, Iterations::Fixed(2)).unwrap();
        assert!((state.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn closed_form_masses() {
        // N = 8, single good: k = 2 gives sin^2(5 asin(1/sqrt 8)) = 0.9453125
        let problem = single_good(3, 5);
        let state = amplitude_amplify(&problem, Iterations::Auto).unwrap();
        assert!((good_mass(&state, problem.good()) - 0.9453125).abs() < 1e-9);
        // k = 0 leaves t = 1/8
        let state = amplitude_amplify(&problem, Iterations::Fixed(0)).unwrap();
        assert!((good_mass(&state, problem.good()) - 0.125).abs() < 1e-12);
    }

    #[test]
    fn operator_stays_in_the_rotation_plane() {
        // Q maps span{U|0>, good} to itself: residual outside the plane stays 0
        let problem = single_good(3, 5);
        let prepared = problem.prepared_state().unwrap();
        let mut state = prepared.clone();
        for _ in 0..4 {
            state = grover_operator(&problem, state).unwrap();
            // the plane is spanned by |5> and the uniform state; project out both
            let good_amp = state.amplitude(5);
            // remaining component must be proportional to the uniform state off index 5
            let off: Vec<_> = (0..8u64)
                .filter(|&x| x != 5)
                .map(|x| state.amplitude(x))
                .collect();
            for pair in off.windows(2) {
                assert!((pair[0] - pair[1]).norm() < 1e-10);
            }
            let _ = good_amp;
        }
        let _ = prepared;
    }

    #[test]
    fn full_good_set_acts_as_global_sign() {
        // G = everything: the good flip is -I, measurement probabilities match
        // the k = 1 run with the zero-state flip alone
        let n = 2;
        let dim = 4;
        let all = GoodSet::from_indices(dim, 0..dim as u64).unwrap();
        let problem = AmplificationProblem::uniform(n, all).unwrap();
        let with_flip = grover_operator(&problem, problem.prepared_state().unwrap()).unwrap();

        let none = GoodSet::from_indices(dim, []).unwrap();
        let trivial = AmplificationProblem::uniform(n, none).unwrap();
        let without_flip =
            grover_operator(&trivial, trivial.prepared_state().unwrap()).unwrap();
        for x in 0..4u64 {
            assert!((with_flip.probability(x) - without_flip.probability(x)).abs() < 1e-12);
        }
    }

    #[test]
    fn recorded_round_matches_direct_round() {
        let problem = single_good(3, 5);
        let direct = grover_operator(&problem, problem.prepared_state().unwrap()).unwrap();
        let recorded = grover_operator_circuit(&problem)
            .unwrap()
            .simulate(problem.prepared_state().unwrap())
            .unwrap();
        assert!(recorded.equals_within(&direct, 1e-10));
    }
}
