//! Phase shifts over a designated good set of basis states.
//!
//! The shift is applied semantically, as a diagonal operator over basis
//! indices; amplitudes in the good set pick up `exp(i*phi)` (or
//! `exp(i*phi(x))` in the per-index variant) and everything else is left
//! alone. Magnitudes are never changed.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::sim::{Gate, StateVector};

type Predicate = Arc<dyn Fn(u64) -> bool + Send + Sync>;

#[derive(Clone)]
enum Membership {
    Explicit(BTreeSet<u64>),
    Predicate(Predicate),
}

/// A subset G of the basis indices 0..N-1. May be empty.
#[derive(Clone)]
pub struct GoodSet {
    universe: usize,
    membership: Membership,
}

impl fmt::Debug for GoodSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.membership {
            Membership::Explicit(set) => f
                .debug_struct("GoodSet")
                .field("universe", &self.universe)
                .field("indices", set)
                .finish(),
            Membership::Predicate(_) => f
                .debug_struct("GoodSet")
                .field("universe", &self.universe)
                .field("indices", &"<predicate>")
                .finish(),
        }
    }
}

impl GoodSet {
    pub fn from_indices(universe: usize, indices: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for index in indices {
            if index >= universe as u64 {
                return Err(Error::GoodIndexOutOfRange { index, universe });
            }
            set.insert(index);
        }
        Ok(GoodSet {
            universe,
            membership: Membership::Explicit(set),
        })
    }

    pub fn from_predicate(universe: usize, predicate: Predicate) -> Self {
        GoodSet {
            universe,
            membership: Membership::Predicate(predicate),
        }
    }

    /// Both representations at once; they must agree on every index.
    pub fn from_both(
        universe: usize,
        indices: impl IntoIterator<Item = u64>,
        predicate: Predicate,
    ) -> Result<Self> {
        let explicit = Self::from_indices(universe, indices)?;
        for index in 0..universe as u64 {
            if explicit.contains(index) != predicate(index) {
                return Err(Error::GoodSetDisagreement { index });
            }
        }
        Ok(explicit)
    }

    /// The single all-zeros basis state, the pivot of the diffusion step.
    pub fn zero_state(universe: usize) -> Self {
        Self::from_indices(universe, [0]).expect("index 0 is always in range")
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn contains(&self, index: u64) -> bool {
        match &self.membership {
            Membership::Explicit(set) => set.contains(&index),
            Membership::Predicate(p) => p(index),
        }
    }

    /// Explicit members, if this set was built from indices.
    pub fn indices(&self) -> Option<&BTreeSet<u64>> {
        match &self.membership {
            Membership::Explicit(set) => Some(set),
            Membership::Predicate(_) => None,
        }
    }
}

#[derive(Clone)]
pub enum PhaseAngle {
    Constant(f64),
    PerIndex(Arc<dyn Fn(u64) -> f64 + Send + Sync>),
}

impl fmt::Debug for PhaseAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PhaseAngle::Constant(phi) => write!(f, "Constant({phi})"),
            PhaseAngle::PerIndex(_) => write!(f, "PerIndex(<fn>)"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct PhaseShiftSpec {
    pub good: GoodSet,
    pub angle: PhaseAngle,
}

impl PhaseShiftSpec {
    pub fn constant(good: GoodSet, phi: f64) -> Result<Self> {
        if !phi.is_finite() {
            return Err(Error::NonFiniteAngle);
        }
        Ok(PhaseShiftSpec {
            good,
            angle: PhaseAngle::Constant(phi),
        })
    }

    /// Sign flip on the good set.
    pub fn pi(good: GoodSet) -> Self {
        Self::constant(good, std::f64::consts::PI).expect("pi is finite")
    }

    pub fn per_index(good: GoodSet, phi: Arc<dyn Fn(u64) -> f64 + Send + Sync>) -> Self {
        PhaseShiftSpec {
            good,
            angle: PhaseAngle::PerIndex(phi),
        }
    }

    fn angle_at(&self, index: u64) -> Result<f64> {
        let phi = match &self.angle {
            PhaseAngle::Constant(phi) => *phi,
            PhaseAngle::PerIndex(f) => f(index),
        };
        if !phi.is_finite() {
            return Err(Error::NonFiniteAngle);
        }
        Ok(phi)
    }
}

/// Multiply the amplitude of every good index by its phase factor.
pub fn phase_shift(state: StateVector, spec: &PhaseShiftSpec) -> Result<StateVector> {
    if spec.good.universe() != state.dim() {
        return Err(Error::UniverseMismatch {
            universe: spec.good.universe(),
            dim: state.dim(),
        });
    }
    let mut state = state;
    for index in 0..state.dim() as u64 {
        if spec.good.contains(index) {
            let phi = spec.angle_at(index)?;
            let factor = num_complex::Complex64::from_polar(1.0, phi);
            state.amplitudes_mut()[index as usize] *= factor;
        }
    }
    Ok(state)
}

/// The recorded form: one diagonal op over the full register.
pub fn phase_shift_circuit(num_qubits: usize, spec: &PhaseShiftSpec) -> Result<Circuit> {
    let dim = 1usize << num_qubits;
    if spec.good.universe() != dim {
        return Err(Error::UniverseMismatch {
            universe: spec.good.universe(),
            dim,
        });
    }
    let mut phases = vec![0.0; dim];
    for (index, slot) in phases.iter_mut().enumerate() {
        if spec.good.contains(index as u64) {
            *slot = spec.angle_at(index as u64)?;
        }
    }
    let mut circuit = Circuit::new(num_qubits);
    circuit.push_tagged(
        Gate::Diagonal {
            targets: (0..num_qubits).collect(),
            phases,
        },
        Some("phase-shift"),
    )?;
    Ok(circuit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::superposition::uniform_superposition;
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    fn plus() -> StateVector {
        uniform_superposition(StateVector::zero(1).unwrap(), &[0]).unwrap()
    }

    #[test]
    fn sign_flip_on_one_index() {
        let spec = PhaseShiftSpec::pi(GoodSet::from_indices(2, [1]).unwrap());
        let s = phase_shift(plus(), &spec).unwrap();
        assert!((s.amplitude(0).re - FRAC_1_SQRT_2).abs() < 1e-12);
        assert!((s.amplitude(1).re + FRAC_1_SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn zero_angle_is_identity() {
        let spec =
            PhaseShiftSpec::constant(GoodSet::from_indices(2, [0, 1]).unwrap(), 0.0).unwrap();
        let s = phase_shift(plus(), &spec).unwrap();
        assert!(s.equals_within(&plus(), 1e-15));
    }

    #[test]
    fn per_index_angles() {
        // phi(x) = pi * x on one qubit: |1> flips sign
        let spec = PhaseShiftSpec::per_index(
            GoodSet::from_indices(2, [0, 1]).unwrap(),
            Arc::new(|x| PI * x as f64),
        );
        let s = phase_shift(plus(), &spec).unwrap();
        assert!((s.amplitude(0).re - FRAC_1_SQRT_2).abs() < 1e-12);
        assert!((s.amplitude(1).re + FRAC_1_SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn magnitudes_never_change() {
        let spec = PhaseShiftSpec::constant(
            GoodSet::from_predicate(4, Arc::new(|x| x % 2 == 0)),
            1.234,
        )
        .unwrap();
        let s = uniform_superposition(StateVector::zero(2).unwrap(), &[0, 1]).unwrap();
        let shifted = phase_shift(s.clone(), &spec).unwrap();
        for index in 0..4 {
            assert!((shifted.amplitude(index).norm() - s.amplitude(index).norm()).abs() < 1e-15);
        }
    }

    #[test]
    fn universe_must_match_state() {
        let spec = PhaseShiftSpec::pi(GoodSet::from_indices(8, [1]).unwrap());
        assert!(matches!(
            phase_shift(plus(), &spec),
            Err(Error::UniverseMismatch { .. })
        ));
    }

    #[test]
    fn explicit_and_predicate_forms_must_agree() {
        let ok = GoodSet::from_both(4, [0, 2], Arc::new(|x| x % 2 == 0));
        assert!(ok.is_ok());
        let bad = GoodSet::from_both(4, [0, 1], Arc::new(|x| x % 2 == 0));
        assert!(matches!(bad, Err(Error::GoodSetDisagreement { index: 1 })));
    }

    #[test]
    fn recorded_diagonal_matches_direct_application() {
        let spec = PhaseShiftSpec::constant(
            GoodSet::from_indices(4, [1, 2]).unwrap(),
            0.77,
        )
        .unwrap();
        let input = uniform_superposition(StateVector::zero(2).unwrap(), &[0, 1]).unwrap();
        let direct = phase_shift(input.clone(), &spec).unwrap();
        let recorded = phase_shift_circuit(2, &spec)
            .unwrap()
            .simulate(input)
            .unwrap();
        assert!(recorded.equals_within(&direct, 1e-12));
    }
}
