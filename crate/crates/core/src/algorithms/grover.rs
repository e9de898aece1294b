//! Grover search over a marked set or a verifier predicate.
//!
//! With a known marked set the round count comes from the closed form and
//! the final state is sampled for the requested number of shots. With an
//! unknown solution count the run delegates to the verifier-driven schedule
//! and reports its per-round measurements instead.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use crate::algorithms::HybridRunReport;
use crate::error::{Error, Result};
use crate::patterns::{
    amplitude_amplify, default_max_rounds, optimal_iterations, search_by_verification,
    AmplificationProblem, GoodSet, Iterations, Verifier,
};
use crate::rng::SimRng;
use crate::sim::format_bits;

#[derive(Clone)]
pub enum GroverTarget {
    /// Explicitly marked basis indices; the solution count is known.
    Marked(BTreeSet<u64>),
    /// A verifier predicate; the solution count is treated as unknown.
    Verifier(Verifier),
}

#[derive(Clone)]
pub struct GroverSpec {
    pub n: usize,
    pub target: GroverTarget,
    pub iterations: Iterations,
    pub shots: u64,
    pub seed: u64,
    /// Round budget for the unknown-count schedule; None takes the default.
    pub max_rounds: Option<u64>,
}

pub fn grover_search(spec: &GroverSpec) -> Result<HybridRunReport> {
    let mut rng = SimRng::seed_from_u64(spec.seed);
    match &spec.target {
        GroverTarget::Marked(indices) => known_count(spec, indices, &mut rng),
        GroverTarget::Verifier(verifier) => unknown_count(spec, verifier.clone(), &mut rng),
    }
}

fn known_count(
    spec: &GroverSpec,
    indices: &BTreeSet<u64>,
    rng: &mut SimRng,
) -> Result<HybridRunReport> {
    if indices.is_empty() {
        return Err(Error::NoSolution);
    }
    let dim = 1usize << spec.n;
    let good = GoodSet::from_indices(dim, indices.iter().copied())?;
    let problem = AmplificationProblem::uniform(spec.n, good)?;
    let k = match spec.iterations {
        Iterations::Auto => optimal_iterations(&problem)?,
        Iterations::Fixed(k) => k,
    };
    let state = amplitude_amplify(&problem, Iterations::Fixed(k))?;

    let raw_counts = state.sample_counts(spec.shots, rng);
    let mut counts = BTreeMap::new();
    let mut hits = 0u64;
    let mut answer: Option<(u64, u64)> = None;
    for (outcome, count) in &raw_counts {
        counts.insert(format_bits(*outcome, spec.n), *count);
        // the classical re-check of each sampled candidate
        if indices.contains(outcome) {
            hits += count;
            if answer.is_none_or(|(_, best)| *count > best) {
                answer = Some((*outcome, *count));
            }
        }
    }
    let success_frequency = hits as f64 / spec.shots.max(1) as f64;

    Ok(HybridRunReport {
        algorithm: "grover".into(),
        preprocessing: format!(
            "marked set of {} over {} basis states; round count {}",
            indices.len(),
            dim,
            k
        ),
        quantum_invocations: k,
        postprocessing: format!(
            "re-verified sampled candidates against the marked set ({hits}/{} hits)",
            spec.shots
        ),
        answer: answer
            .map(|(index, _)| format_bits(index, spec.n))
            .unwrap_or_else(|| "none".into()),
        seed: spec.seed,
        shots: spec.shots,
        counts,
        success_frequency: Some(success_frequency),
        iterations: Some(k),
    })
}

fn unknown_count(
    spec: &GroverSpec,
    verifier: Verifier,
    rng: &mut SimRng,
) -> Result<HybridRunReport> {
    let max_rounds = spec.max_rounds.unwrap_or_else(|| default_max_rounds(spec.n));
    let outcome = search_by_verification(verifier, spec.n, rng, max_rounds)?;
    let mut counts = BTreeMap::new();
    if let Some(answer) = outcome.answer {
        counts.insert(format_bits(answer, spec.n), 1u64);
    }
    Ok(HybridRunReport {
        algorithm: "grover".into(),
        preprocessing: format!(
            "unknown solution count over {} basis states; growing random round schedule",
            1usize << spec.n
        ),
        quantum_invocations: outcome.oracle_invocations,
        postprocessing: format!(
            "classically verified {} measured candidates over {} rounds",
            outcome.classical_checks, outcome.rounds_used
        ),
        answer: outcome
            .answer
            .map(|index| format_bits(index, spec.n))
            .unwrap_or_else(|| "not-found".into()),
        seed: spec.seed,
        shots: spec.shots,
        counts,
        success_frequency: Some(if outcome.answer.is_some() { 1.0 } else { 0.0 }),
        iterations: Some(outcome.oracle_invocations),
    })
}

/// Closed-form good-set mass after k rounds, sin^2((2k+1) asin(sqrt(g/N))).
pub fn predicted_success(n: usize, marked: usize, k: u64) -> f64 {
    let theta = ((marked as f64) / (1u64 << n) as f64).sqrt().asin();
    ((2 * k + 1) as f64 * theta).sin().powi(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::phase::GoodSet;

    fn marked(n: usize, indices: &[u64]) -> GroverSpec {
        GroverSpec {
            n,
            target: GroverTarget::Marked(indices.iter().copied().collect()),
            iterations: Iterations::Auto,
            shots: 4096,
            seed: 7,
            max_rounds: None,
        }
    }

    #[test]
    fn two_qubit_single_mark_is_certain() {
        let report = grover_search(&marked(2, &[2])).unwrap();
        assert_eq!(report.success_frequency, Some(1.0));
        assert_eq!(report.answer, "10");
        assert_eq!(report.iterations, Some(1));
    }

    #[test]
    fn three_qubit_single_mark_matches_closed_form() {
        let report = grover_search(&marked(3, &[5])).unwrap();
        let p = predicted_success(3, 1, 2);
        assert!((p - 0.9453125).abs() < 1e-12);
        // 4 sigma of the empirical frequency at 4096 shots
        let sigma = (p * (1.0 - p) / 4096.0).sqrt();
        let freq = report.success_frequency.unwrap();
        assert!((freq - p).abs() <= 4.0 * sigma, "freq {freq}");
        assert_eq!(report.answer, "101");
    }

    #[test]
    fn empty_marked_set_is_an_error() {
        let err = grover_search(&marked(3, &[])).unwrap_err();
        assert!(matches!(err, Error::NoSolution));
    }

    #[test]
    fn verifier_mode_returns_verified_answer() {
        let spec = GroverSpec {
            n: 3,
            target: GroverTarget::Verifier(std::sync::Arc::new(|x| x == 5)),
            iterations: Iterations::Auto,
            shots: 1,
            seed: 42,
            max_rounds: None,
        };
        let report = grover_search(&spec).unwrap();
        assert_eq!(report.answer, "101");
        assert_eq!(report.success_frequency, Some(1.0));
    }

    #[test]
    fn fixed_iterations_respected() {
        let mut spec = marked(3, &[5]);
        spec.iterations = Iterations::Fixed(0);
        let report = grover_search(&spec).unwrap();
        assert_eq!(report.iterations, Some(0));
        // k = 0 samples the uniform state: success frequency near 1/8
        let freq = report.success_frequency.unwrap();
        let sigma = (0.125f64 * 0.875 / 4096.0).sqrt();
        assert!((freq - 0.125).abs() <= 4.0 * sigma);
    }

    #[test]
    fn good_mass_is_exposed_for_diagnostics() {
        let problem =
            AmplificationProblem::uniform(2, GoodSet::from_indices(4, [2]).unwrap()).unwrap();
        let state = amplitude_amplify(&problem, Iterations::Fixed(1)).unwrap();
        assert!((crate::patterns::good_mass(&state, problem.good()) - 1.0).abs() < 1e-9);
    }
}
