//! Separability across a bipartition, via Schmidt (singular value)
//! decomposition of the reshaped amplitude matrix.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::sim::state::StateVector;

/// Singular values below this are treated as zero Schmidt coefficients.
pub const SEPARABILITY_TOL: f64 = 1e-9;

impl StateVector {
    /// Schmidt coefficients across the cut (`side` | rest), descending.
    pub fn schmidt_values(&self, side: &[usize]) -> Result<Vec<f64>> {
        let (side, rest) = split_cut(self.num_qubits(), side)?;
        let matrix = reshape(self, &side, &rest);
        let mut values: Vec<f64> = matrix.svd(false, false).singular_values.iter().copied().collect();
        values.sort_by(|a, b| b.partial_cmp(a).unwrap());
        Ok(values)
    }

    /// True iff the state factors across the cut, i.e. exactly one Schmidt
    /// coefficient exceeds [`SEPARABILITY_TOL`].
    pub fn is_separable(&self, side: &[usize]) -> Result<bool> {
        let values = self.schmidt_values(side)?;
        Ok(values.iter().filter(|v| **v > SEPARABILITY_TOL).count() == 1)
    }

    /// Remove the listed qubits, which must be separable from the rest;
    /// attempting to discard entangled qubits is refused. The surviving
    /// qubits keep their relative order and are renumbered from 0.
    pub fn discard(self, qubits: &[usize]) -> Result<StateVector> {
        if !self.is_separable(qubits)? {
            return Err(Error::EntangledDiscard);
        }
        let (discarded, kept) = split_cut(self.num_qubits(), qubits)?;
        let matrix = reshape(&self, &kept, &discarded);

        // Rank is 1, so the kept factor is any nonzero column, normalized.
        // Pick the dominant one for stability.
        let mut best = 0;
        let mut best_norm = 0.0;
        for c in 0..matrix.ncols() {
            let norm: f64 = matrix.column(c).iter().map(|z| z.norm_sqr()).sum();
            if norm > best_norm {
                best_norm = norm;
                best = c;
            }
        }
        let amps: Vec<Complex64> = matrix.column(best).iter().copied().collect();
        let mut factor = StateVector::from_unnormalized(amps)?;
        factor.renormalize();
        Ok(factor)
    }
}

/// Validate a cut and return (sorted side, sorted complement).
fn split_cut(num_qubits: usize, side: &[usize]) -> Result<(Vec<usize>, Vec<usize>)> {
    if side.is_empty() {
        return Err(Error::InvalidCut {
            reason: "one side of the cut is empty".into(),
        });
    }
    let mut sorted = side.to_vec();
    sorted.sort_unstable();
    for (pos, &q) in sorted.iter().enumerate() {
        if q >= num_qubits {
            return Err(Error::InvalidCut {
                reason: format!("qubit {q} out of range for {num_qubits} qubits"),
            });
        }
        if pos > 0 && sorted[pos - 1] == q {
            return Err(Error::InvalidCut {
                reason: format!("qubit {q} listed twice"),
            });
        }
    }
    let rest: Vec<usize> = (0..num_qubits).filter(|q| !sorted.contains(q)).collect();
    if rest.is_empty() {
        return Err(Error::InvalidCut {
            reason: "cut covers the whole register".into(),
        });
    }
    Ok((sorted, rest))
}

/// Amplitude matrix with rows indexed by the `rows` qubits and columns by
/// the `cols` qubits (each in ascending-qubit bit order).
fn reshape(state: &StateVector, rows: &[usize], cols: &[usize]) -> DMatrix<Complex64> {
    let nr = 1usize << rows.len();
    let nc = 1usize << cols.len();
    DMatrix::from_fn(nr, nc, |r, c| {
        let mut basis = 0usize;
        for (j, &q) in rows.iter().enumerate() {
            basis |= ((r >> j) & 1) << q;
        }
        for (j, &q) in cols.iter().enumerate() {
            basis |= ((c >> j) & 1) << q;
        }
        state.amplitude(basis as u64)
    })
}
