//! Search driven by a classical verifier.
//!
//! When the number of solutions is unknown, the amplification round count
//! cannot be fixed in advance. The schedule here draws the round count
//! uniformly from a window that grows by a factor of 1.28 per attempt,
//! capped at ceil(pi/4 * sqrt(N)); the first attempt is a plain classical
//! sample (zero rounds). Every measured candidate is re-verified
//! classically, so a returned index always satisfies the verifier; a miss
//! after the round budget is reported as not-found, never as a wrong
//! answer.

use std::sync::Arc;

use crate::error::Result;
use crate::patterns::amplify::{amplitude_amplify, AmplificationProblem, Iterations};
use crate::patterns::phase::GoodSet;
use crate::rng::SimRng;

pub type Verifier = Arc<dyn Fn(u64) -> bool + Send + Sync>;

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    /// A verified solution, or None when the budget ran out.
    pub answer: Option<u64>,
    /// Total amplification rounds executed; each round queries the oracle
    /// once.
    pub oracle_invocations: u64,
    /// Classical verifier calls on measured candidates.
    pub classical_checks: u64,
    pub rounds_used: u64,
}

pub fn default_max_rounds(n: usize) -> u64 {
    n as u64 + 10
}

pub fn search_by_verification(
    verifier: Verifier,
    n: usize,
    rng: &mut SimRng,
    max_rounds: u64,
) -> Result<SearchOutcome> {
    let dim = 1usize << n;
    let good = GoodSet::from_predicate(dim, verifier.clone());
    let problem = AmplificationProblem::uniform(n, good)?;
    let cap = (std::f64::consts::FRAC_PI_4 * (dim as f64).sqrt()).ceil() as u64;

    let mut oracle_invocations = 0;
    let mut classical_checks = 0;
    for round in 0..max_rounds {
        let k = if round == 0 {
            0
        } else {
            let window = (1.28f64.powi(round as i32)).ceil() as u64;
            rng.below_inclusive(window.min(cap))
        };
        let state = amplitude_amplify(&problem, Iterations::Fixed(k))?;
        oracle_invocations += k;
        let (candidate, _) = state.measure_all(rng);
        classical_checks += 1;
        if verifier(candidate) {
            return Ok(SearchOutcome {
                answer: Some(candidate),
                oracle_invocations,
                classical_checks,
                rounds_used: round + 1,
            });
        }
    }
    Ok(SearchOutcome {
        answer: None,
        oracle_invocations,
        classical_checks,
        rounds_used: max_rounds,
    })
}
