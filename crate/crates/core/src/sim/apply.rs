//! Gate application over the dense amplitude array.

use num_complex::Complex64;

use crate::error::Result;
use crate::sim::gate::{check_bijection, Gate};
use crate::sim::state::StateVector;

impl StateVector {
    /// Apply a gate, returning the transformed state. The gate acts linearly
    /// on its target qubits and as the identity elsewhere.
    pub fn apply(mut self, gate: &Gate) -> Result<StateVector> {
        gate.validate(self.num_qubits())?;
        let n = self.num_qubits();
        apply_in_place(self.amplitudes_mut(), n, gate);
        Ok(self)
    }

    /// Reindex amplitudes by a bijection of the targeted local basis: the
    /// amplitude at local index `l` moves to `map[l]`.
    pub fn apply_basis_permutation(mut self, targets: &[usize], map: &[usize]) -> Result<StateVector> {
        let gate = Gate::Permutation {
            targets: targets.to_vec(),
            map: map.to_vec(),
        };
        gate.validate(self.num_qubits())?;
        check_bijection(map, 1 << targets.len())?;
        let n = self.num_qubits();
        permute(self.amplitudes_mut(), n, targets, map);
        Ok(self)
    }
}

fn apply_in_place(amps: &mut [Complex64], n: usize, gate: &Gate) {
    match gate {
        Gate::H { target } => {
            let f = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
            for_pairs(amps, *target, |lo, hi| (f * (lo + hi), f * (lo - hi)));
        }
        Gate::X { target } => {
            for_pairs(amps, *target, |lo, hi| (hi, lo));
        }
        Gate::Z { target } => {
            let mask = 1usize << target;
            for (b, a) in amps.iter_mut().enumerate() {
                if b & mask != 0 {
                    *a = -*a;
                }
            }
        }
        Gate::Phase { target, angle } => {
            let mask = 1usize << target;
            let phase = Complex64::from_polar(1.0, *angle);
            for (b, a) in amps.iter_mut().enumerate() {
                if b & mask != 0 {
                    *a *= phase;
                }
            }
        }
        Gate::Cnot { control, target } => {
            let cmask = 1usize << control;
            let tmask = 1usize << target;
            for b in 0..amps.len() {
                if b & cmask != 0 && b & tmask == 0 {
                    amps.swap(b, b | tmask);
                }
            }
        }
        Gate::Swap { a, b } => {
            let ma = 1usize << a;
            let mb = 1usize << b;
            for idx in 0..amps.len() {
                if idx & ma != 0 && idx & mb == 0 {
                    amps.swap(idx, idx ^ ma ^ mb);
                }
            }
        }
        Gate::Generic { targets, matrix } => {
            let k = targets.len();
            let dim = 1usize << k;
            let mut local = vec![Complex64::ZERO; dim];
            for_blocks(amps.len(), n, targets, |base| {
                for (l, slot) in local.iter_mut().enumerate() {
                    *slot = amps[base | scatter(l, targets)];
                }
                for (r, row) in matrix.iter().enumerate() {
                    let mut acc = Complex64::ZERO;
                    for (c, entry) in row.iter().enumerate() {
                        acc += entry * local[c];
                    }
                    amps[base | scatter(r, targets)] = acc;
                }
            });
        }
        Gate::Permutation { targets, map } => {
            permute(amps, n, targets, map);
        }
        Gate::Diagonal { targets, phases } => {
            let factors: Vec<Complex64> = phases
                .iter()
                .map(|p| Complex64::from_polar(1.0, *p))
                .collect();
            for (b, a) in amps.iter_mut().enumerate() {
                *a *= factors[gather(b, targets)];
            }
        }
    }
}

fn permute(amps: &mut [Complex64], n: usize, targets: &[usize], map: &[usize]) {
    let dim = 1usize << targets.len();
    let mut local = vec![Complex64::ZERO; dim];
    for_blocks(amps.len(), n, targets, |base| {
        for (l, slot) in local.iter_mut().enumerate() {
            *slot = amps[base | scatter(l, targets)];
        }
        for (l, &to) in map.iter().enumerate() {
            amps[base | scatter(to, targets)] = local[l];
        }
    });
}

/// Local index of `global` over the targeted bits: bit `j` of the result is
/// bit `targets[j]` of `global`.
#[inline]
fn gather(global: usize, targets: &[usize]) -> usize {
    let mut local = 0;
    for (j, &t) in targets.iter().enumerate() {
        local |= ((global >> t) & 1) << j;
    }
    local
}

/// Inverse of `gather`: spread the bits of `local` onto the target positions.
#[inline]
fn scatter(local: usize, targets: &[usize]) -> usize {
    let mut global = 0;
    for (j, &t) in targets.iter().enumerate() {
        global |= ((local >> j) & 1) << t;
    }
    global
}

/// Visit every basis index whose target bits are all zero.
fn for_blocks(dim: usize, _n: usize, targets: &[usize], mut visit: impl FnMut(usize)) {
    let mask: usize = targets.iter().map(|t| 1usize << t).sum();
    for base in 0..dim {
        if base & mask == 0 {
            visit(base);
        }
    }
}

/// Visit the (bit = 0, bit = 1) amplitude pairs of one qubit.
fn for_pairs(
    amps: &mut [Complex64],
    target: usize,
    update: impl Fn(Complex64, Complex64) -> (Complex64, Complex64),
) {
    let step = 1usize << target;
    let mut base = 0;
    while base < amps.len() {
        for offset in base..base + step {
            let (lo, hi) = update(amps[offset], amps[offset + step]);
            amps[offset] = lo;
            amps[offset + step] = hi;
        }
        base += 2 * step;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() < 1e-12
    }

    #[test]
    fn hadamard_on_zero() {
        let s = StateVector::zero(1)
            .unwrap()
            .apply(&Gate::H { target: 0 })
            .unwrap();
        assert!(close(s.amplitude(0), Complex64::new(FRAC_1_SQRT_2, 0.0)));
        assert!(close(s.amplitude(1), Complex64::new(FRAC_1_SQRT_2, 0.0)));
    }

    #[test]
    fn cnot_entangles_superposed_control() {
        // (|00> + |10>)/sqrt(2) with the 1 on qubit 0, then CNOT 0 -> 1.
        let s = StateVector::zero(2)
            .unwrap()
            .apply(&Gate::H { target: 0 })
            .unwrap()
            .apply(&Gate::Cnot {
                control: 0,
                target: 1,
            })
            .unwrap();
        let f = Complex64::new(FRAC_1_SQRT_2, 0.0);
        assert!(close(s.amplitude(0b00), f));
        assert!(close(s.amplitude(0b11), f));
        assert!(close(s.amplitude(0b01), Complex64::ZERO));
        assert!(close(s.amplitude(0b10), Complex64::ZERO));
    }

    #[test]
    fn hadamard_is_involution() {
        let amps = vec![
            Complex64::new(0.1, 0.2),
            Complex64::new(-0.3, 0.1),
            Complex64::new(0.25, -0.4),
            Complex64::new(0.5, 0.1),
            Complex64::new(0.0, 0.35),
            Complex64::new(0.2, -0.1),
            Complex64::new(-0.15, 0.05),
            Complex64::new(0.3, 0.2),
        ];
        let s = StateVector::from_unnormalized(amps).unwrap();
        let original = s.clone();
        let twice = s
            .apply(&Gate::H { target: 1 })
            .unwrap()
            .apply(&Gate::H { target: 1 })
            .unwrap();
        assert!(twice.equals_within(&original, 1e-12));
    }

    #[test]
    fn identity_permutation_is_noop() {
        let s = StateVector::zero(2)
            .unwrap()
            .apply(&Gate::H { target: 0 })
            .unwrap();
        let before = s.clone();
        let after = s.apply_basis_permutation(&[0, 1], &[0, 1, 2, 3]).unwrap();
        assert!(after.equals_within(&before, 0.0));
    }

    #[test]
    fn swap_permutation_on_one_qubit() {
        let s = StateVector::from_unnormalized(vec![
            Complex64::new(0.6, 0.0),
            Complex64::new(0.8, 0.0),
        ])
        .unwrap();
        let flipped = s.apply_basis_permutation(&[0], &[1, 0]).unwrap();
        assert!(close(flipped.amplitude(0), Complex64::new(0.8, 0.0)));
        assert!(close(flipped.amplitude(1), Complex64::new(0.6, 0.0)));
    }

    #[test]
    fn cnot_as_permutation_matches_gate() {
        // control = qubit 1, target = qubit 0 is local map (0,1,3,2)
        let map = [0usize, 1, 3, 2];
        for basis in 0..4u64 {
            let via_perm = StateVector::basis(2, basis)
                .unwrap()
                .apply_basis_permutation(&[0, 1], &map)
                .unwrap();
            let via_gate = StateVector::basis(2, basis)
                .unwrap()
                .apply(&Gate::Cnot {
                    control: 1,
                    target: 0,
                })
                .unwrap();
            assert!(via_perm.equals_within(&via_gate, 0.0), "basis {basis}");
        }
    }

    #[test]
    fn generic_matches_named_gate() {
        let f = Complex64::new(FRAC_1_SQRT_2, 0.0);
        let h = Gate::Generic {
            targets: vec![1],
            matrix: vec![vec![f, f], vec![f, -f]],
        };
        let a = StateVector::basis(2, 0b10).unwrap().apply(&h).unwrap();
        let b = StateVector::basis(2, 0b10)
            .unwrap()
            .apply(&Gate::H { target: 1 })
            .unwrap();
        assert!(a.equals_within(&b, 1e-12));
    }

    #[test]
    fn bad_targets_are_rejected() {
        let s = StateVector::zero(2).unwrap();
        let err = s.apply(&Gate::X { target: 5 }).unwrap_err();
        assert!(matches!(err, Error::QubitOutOfRange { index: 5, .. }));

        let s = StateVector::zero(2).unwrap();
        let err = s.apply_basis_permutation(&[0, 1], &[0, 0, 1, 2]).unwrap_err();
        assert!(matches!(err, Error::NotBijective { .. }));
    }

    #[test]
    fn diagonal_applies_per_index_phases() {
        use std::f64::consts::PI;
        let s = StateVector::zero(1)
            .unwrap()
            .apply(&Gate::H { target: 0 })
            .unwrap()
            .apply(&Gate::Diagonal {
                targets: vec![0],
                phases: vec![0.0, PI],
            })
            .unwrap();
        let f = FRAC_1_SQRT_2;
        assert!((s.amplitude(0).re - f).abs() < 1e-12);
        assert!((s.amplitude(1).re + f).abs() < 1e-12);
    }
}
