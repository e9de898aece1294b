//! Gate descriptions.
//!
//! A [`Gate`] is a value describing a unitary and the qubits it acts on. For
//! multi-target kinds the local basis index is assembled with `targets[j]` as
//! bit `j`, so listing targets in ascending order makes the local index a
//! plain bit-extraction of the global one.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Max deviation from U†U = I accepted for explicit matrices.
pub const UNITARY_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Gate {
    H { target: usize },
    X { target: usize },
    Z { target: usize },
    Phase { target: usize, angle: f64 },
    Cnot { control: usize, target: usize },
    Swap { a: usize, b: usize },
    /// Arbitrary unitary on `targets`, row-major over the local basis.
    Generic {
        targets: Vec<usize>,
        matrix: Vec<Vec<Complex64>>,
    },
    /// Relabeling of the local basis: the amplitude at local index `l`
    /// moves to `map[l]`.
    Permutation { targets: Vec<usize>, map: Vec<usize> },
    /// Diagonal phases over the local basis: local index `l` picks up
    /// `exp(i * phases[l])`.
    Diagonal { targets: Vec<usize>, phases: Vec<f64> },
}

impl Gate {
    pub fn name(&self) -> &'static str {
        match self {
            Gate::H { .. } => "h",
            Gate::X { .. } => "x",
            Gate::Z { .. } => "z",
            Gate::Phase { .. } => "phase",
            Gate::Cnot { .. } => "cnot",
            Gate::Swap { .. } => "swap",
            Gate::Generic { .. } => "generic",
            Gate::Permutation { .. } => "permutation",
            Gate::Diagonal { .. } => "diagonal",
        }
    }

    pub fn targets(&self) -> Vec<usize> {
        match self {
            Gate::H { target } | Gate::X { target } | Gate::Z { target } => vec![*target],
            Gate::Phase { target, .. } => vec![*target],
            Gate::Cnot { control, target } => vec![*control, *target],
            Gate::Swap { a, b } => vec![*a, *b],
            Gate::Generic { targets, .. }
            | Gate::Permutation { targets, .. }
            | Gate::Diagonal { targets, .. } => targets.clone(),
        }
    }

    /// Check target validity against a register width plus the kind's own
    /// shape invariants (unitarity, bijectivity, finite angles).
    pub fn validate(&self, num_qubits: usize) -> Result<()> {
        let targets = self.targets();
        for (pos, &t) in targets.iter().enumerate() {
            if t >= num_qubits {
                return Err(Error::QubitOutOfRange {
                    index: t,
                    num_qubits,
                });
            }
            if targets[..pos].contains(&t) {
                return Err(Error::DuplicateTarget { index: t });
            }
        }
        match self {
            Gate::Phase { angle, .. } => {
                if !angle.is_finite() {
                    return Err(Error::NonFiniteAngle);
                }
            }
            Gate::Generic { targets, matrix } => {
                let dim = 1usize << targets.len();
                if matrix.len() != dim || matrix.iter().any(|row| row.len() != dim) {
                    return Err(Error::GateShape {
                        expected: dim,
                        actual: matrix.len(),
                    });
                }
                check_unitary(matrix)?;
            }
            Gate::Permutation { targets, map } => {
                let dim = 1usize << targets.len();
                check_bijection(map, dim)?;
            }
            Gate::Diagonal { targets, phases } => {
                let dim = 1usize << targets.len();
                if phases.len() != dim {
                    return Err(Error::GateShape {
                        expected: dim,
                        actual: phases.len(),
                    });
                }
                if phases.iter().any(|p| !p.is_finite()) {
                    return Err(Error::NonFiniteAngle);
                }
            }
            _ => {}
        }
        Ok(())
    }

    /// The inverse gate. H, X, Z, CNOT and SWAP are their own inverses.
    pub fn adjoint(&self) -> Gate {
        match self {
            Gate::H { .. } | Gate::X { .. } | Gate::Z { .. } | Gate::Cnot { .. }
            | Gate::Swap { .. } => self.clone(),
            Gate::Phase { target, angle } => Gate::Phase {
                target: *target,
                angle: -angle,
            },
            Gate::Generic { targets, matrix } => {
                let dim = matrix.len();
                let mut adj = vec![vec![Complex64::ZERO; dim]; dim];
                for (r, row) in matrix.iter().enumerate() {
                    for (c, entry) in row.iter().enumerate() {
                        adj[c][r] = entry.conj();
                    }
                }
                Gate::Generic {
                    targets: targets.clone(),
                    matrix: adj,
                }
            }
            Gate::Permutation { targets, map } => {
                let mut inverse = vec![0usize; map.len()];
                for (from, &to) in map.iter().enumerate() {
                    inverse[to] = from;
                }
                Gate::Permutation {
                    targets: targets.clone(),
                    map: inverse,
                }
            }
            Gate::Diagonal { targets, phases } => Gate::Diagonal {
                targets: targets.clone(),
                phases: phases.iter().map(|p| -p).collect(),
            },
        }
    }
}

pub(crate) fn check_unitary(matrix: &[Vec<Complex64>]) -> Result<()> {
    let dim = matrix.len();
    let mut deviation: f64 = 0.0;
    for r in 0..dim {
        for c in 0..dim {
            let mut dot = Complex64::ZERO;
            for row in matrix {
                dot += row[r].conj() * row[c];
            }
            let expected = if r == c { Complex64::ONE } else { Complex64::ZERO };
            deviation = deviation.max((dot - expected).norm());
        }
    }
    if deviation > UNITARY_TOL {
        return Err(Error::NotUnitary { deviation });
    }
    Ok(())
}

pub(crate) fn check_bijection(map: &[usize], dim: usize) -> Result<()> {
    if map.len() != dim {
        return Err(Error::NotBijective { dim });
    }
    let mut seen = vec![false; dim];
    for &to in map {
        if to >= dim || seen[to] {
            return Err(Error::NotBijective { dim });
        }
        seen[to] = true;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frac() -> Complex64 {
        Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0)
    }

    #[test]
    fn validate_catches_bad_targets() {
        let g = Gate::H { target: 3 };
        assert!(matches!(
            g.validate(2),
            Err(Error::QubitOutOfRange { index: 3, .. })
        ));
        let g = Gate::Cnot {
            control: 1,
            target: 1,
        };
        assert!(matches!(g.validate(2), Err(Error::DuplicateTarget { index: 1 })));
    }

    #[test]
    fn generic_must_be_unitary() {
        let ok = Gate::Generic {
            targets: vec![0],
            matrix: vec![vec![frac(), frac()], vec![frac(), -frac()]],
        };
        assert!(ok.validate(1).is_ok());

        let bad = Gate::Generic {
            targets: vec![0],
            matrix: vec![
                vec![Complex64::ONE, Complex64::ONE],
                vec![Complex64::ZERO, Complex64::ONE],
            ],
        };
        assert!(matches!(bad.validate(1), Err(Error::NotUnitary { .. })));
    }

    #[test]
    fn permutation_must_be_bijective() {
        let bad = Gate::Permutation {
            targets: vec![0, 1],
            map: vec![0, 0, 2, 3],
        };
        assert!(matches!(bad.validate(2), Err(Error::NotBijective { dim: 4 })));
    }

    #[test]
    fn adjoints() {
        assert_eq!(Gate::H { target: 0 }.adjoint(), Gate::H { target: 0 });
        assert_eq!(
            Gate::Phase {
                target: 0,
                angle: 1.25
            }
            .adjoint(),
            Gate::Phase {
                target: 0,
                angle: -1.25
            }
        );
        let perm = Gate::Permutation {
            targets: vec![0, 1],
            map: vec![2, 0, 3, 1],
        };
        if let Gate::Permutation { map, .. } = perm.adjoint() {
            assert_eq!(map, vec![1, 3, 0, 2]);
        } else {
            panic!("adjoint changed gate kind");
        }
        assert_eq!(perm.adjoint().adjoint(), perm);
    }
}
