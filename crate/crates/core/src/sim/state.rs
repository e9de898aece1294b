//! Dense state-vector representation.
//!
//! # Conventions
//!
//! Qubit `i` contributes `2^i` to a basis index, so qubit 0 is the least
//! significant bit. Printed bitstrings show the highest-indexed qubit
//! leftmost, matching QASM register indexing (`q[i]` is qubit `i`).
//!
//! Multi-register states follow the usual tensor-product reading: in
//! `a.tensor(&b)` the factor `a` occupies the high qubits. Register layouts
//! (see [`super::layout`]) stack their registers the same way, so a state
//! written register-by-register reads off as one binary number.

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Default upper bound on register width: 2^24 amplitudes is 256 MiB.
pub const DEFAULT_QUBIT_CAP: usize = 24;

/// Norm drift allowed on stored states.
pub const NORM_TOL: f64 = 1e-10;

static QUBIT_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_QUBIT_CAP);

/// Current register-width cap.
pub fn qubit_cap() -> usize {
    QUBIT_CAP.load(Ordering::Relaxed)
}

/// Override the register-width cap for this process. Exceeding the cap is
/// reported as an error before any amplitude storage is allocated.
pub fn set_qubit_cap(cap: usize) {
    QUBIT_CAP.store(cap.max(1), Ordering::Relaxed);
}

fn check_cap(num_qubits: usize) -> Result<()> {
    let cap = qubit_cap();
    if num_qubits == 0 || num_qubits > cap {
        return Err(Error::CapacityExceeded {
            requested: num_qubits,
            cap,
        });
    }
    Ok(())
}

#[derive(Debug, Clone)]
pub struct StateVector {
    num_qubits: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// The all-zeros basis state |0...0>.
    pub fn zero(num_qubits: usize) -> Result<Self> {
        Self::basis(num_qubits, 0)
    }

    /// The basis state with the given index.
    pub fn basis(num_qubits: usize, index: u64) -> Result<Self> {
        check_cap(num_qubits)?;
        let dim = 1usize << num_qubits;
        if index >= dim as u64 {
            return Err(Error::QubitOutOfRange {
                index: index as usize,
                num_qubits,
            });
        }
        let mut amps = vec![Complex64::ZERO; dim];
        amps[index as usize] = Complex64::ONE;
        Ok(StateVector { num_qubits, amps })
    }

    /// Adopt an already-normalized amplitude vector.
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self> {
        let state = Self::from_unnormalized(amps)?;
        Ok(state)
    }

    /// Adopt an amplitude vector, normalizing it. Rejects zero-norm input.
    pub fn from_unnormalized(amps: Vec<Complex64>) -> Result<Self> {
        let len = amps.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::BadAmplitudeCount { len });
        }
        let num_qubits = len.trailing_zeros() as usize;
        check_cap(num_qubits)?;
        for (index, a) in amps.iter().enumerate() {
            if !a.re.is_finite() || !a.im.is_finite() {
                return Err(Error::NonFiniteAmplitude { index });
            }
        }
        let norm: f64 = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-12 {
            return Err(Error::ZeroNorm);
        }
        let mut amps = amps;
        if (norm - 1.0).abs() > NORM_TOL {
            let inv = 1.0 / norm;
            for a in &mut amps {
                *a *= inv;
            }
        }
        Ok(StateVector { num_qubits, amps })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    /// Dimension of the state space, `2^num_qubits`.
    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitude(&self, index: u64) -> Complex64 {
        self.amps[index as usize]
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub(crate) fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amps
    }

    pub fn probability(&self, index: u64) -> f64 {
        self.amps[index as usize].norm_sqr()
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub(crate) fn renormalize(&mut self) {
        let norm = self.norm();
        if norm > 0.0 {
            let inv = 1.0 / norm;
            for a in &mut self.amps {
                *a *= inv;
            }
        }
    }

    /// Tensor product; `self` takes the high qubits.
    pub fn tensor(&self, low: &StateVector) -> Result<StateVector> {
        let num_qubits = self.num_qubits + low.num_qubits;
        check_cap(num_qubits)?;
        let mut amps = vec![Complex64::ZERO; 1 << num_qubits];
        for (hi, a) in self.amps.iter().enumerate() {
            if a.norm_sqr() == 0.0 {
                continue;
            }
            let base = hi << low.num_qubits;
            for (lo, b) in low.amps.iter().enumerate() {
                amps[base | lo] = a * b;
            }
        }
        Ok(StateVector { num_qubits, amps })
    }

    /// Largest element-wise amplitude difference to `other`.
    pub fn max_difference(&self, other: &StateVector) -> f64 {
        assert_eq!(self.num_qubits, other.num_qubits, "qubit counts differ");
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn equals_within(&self, other: &StateVector, tol: f64) -> bool {
        self.num_qubits == other.num_qubits && self.max_difference(other) <= tol
    }

    /// True iff `self = c * other` for some unit scalar `c`, decided through
    /// the overlap criterion `|<self|other>| >= 1 - tol`.
    pub fn equals_up_to_global_phase(&self, other: &StateVector, tol: f64) -> bool {
        if self.num_qubits != other.num_qubits {
            return false;
        }
        let overlap: Complex64 = self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum();
        overlap.norm() >= 1.0 - tol
    }

    /// Printed form of a basis index, highest qubit leftmost.
    pub fn bit_label(&self, index: u64) -> String {
        format_bits(index, self.num_qubits)
    }
}

/// Render `value` as a bitstring of the given width, highest bit leftmost.
pub fn format_bits(value: u64, width: usize) -> String {
    format!("{value:0width$b}")
}

impl fmt::Display for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (index, a) in self.amps.iter().enumerate() {
            if a.norm() > 1e-12 {
                writeln!(
                    f,
                    "|{}>  {:+.6}{:+.6}i",
                    format_bits(index as u64, self.num_qubits),
                    a.re,
                    a.im
                )?;
            }
        }
        Ok(())
    }
}
