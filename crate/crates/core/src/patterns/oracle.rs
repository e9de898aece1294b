//! Oracle synthesis from truth tables.
//!
//! A synthesized oracle realizes the reversible XOR embedding
//! `|x,y> -> |x, y XOR f(x)>` on an (n+m)-qubit register with the input
//! register on the high qubits and the value register on the low qubits.
//! Functions whose output bits are all XOR-affine in the input bits lower to
//! X and CNOT gates and are therefore QASM-exportable; everything else is
//! realized as a single basis permutation, which only the simulator accepts.

use crate::circuit::Circuit;
use crate::error::Result;
use crate::patterns::boolean::BooleanFunction;
use crate::sim::{Gate, StateVector};

#[derive(Debug, Clone)]
pub struct Oracle {
    n: usize,
    m: usize,
    action: Circuit,
    label: String,
}

impl Oracle {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn num_qubits(&self) -> usize {
        self.n + self.m
    }

    pub fn action(&self) -> &Circuit {
        &self.action
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: &str) -> Self {
        self.label = label.to_string();
        self
    }
}

/// Build the XOR oracle of a truth table.
pub fn synthesize_oracle(f: &BooleanFunction) -> Oracle {
    let n = f.n();
    let m = f.m();
    let mut action = Circuit::new(n + m);

    if let Some((constants, masks)) = affine_decomposition(f) {
        for (j, mask) in masks.iter().enumerate() {
            if constants >> j & 1 == 1 {
                action
                    .push_tagged(Gate::X { target: j }, Some("oracle"))
                    .expect("targets are in range by construction");
            }
            for i in 0..n {
                if mask >> i & 1 == 1 {
                    action
                        .push_tagged(
                            Gate::Cnot {
                                control: m + i,
                                target: j,
                            },
                            Some("oracle"),
                        )
                        .expect("targets are in range by construction");
                }
            }
        }
    } else {
        let value_mask = (1u64 << m) - 1;
        let map: Vec<usize> = (0..1usize << (n + m))
            .map(|b| {
                let x = (b >> m) as u64;
                let y = b as u64 & value_mask;
                ((x as usize) << m) | ((y ^ f.evaluate(x)) as usize)
            })
            .collect();
        action
            .push_tagged(
                Gate::Permutation {
                    targets: (0..n + m).collect(),
                    map,
                },
                Some("oracle"),
            )
            .expect("permutation is a bijection by construction");
    }

    Oracle {
        n,
        m,
        action,
        label: format!("oracle{n}x{m}"),
    }
}

/// Apply an oracle to a state spanning exactly its register.
pub fn apply_oracle(state: StateVector, oracle: &Oracle) -> Result<StateVector> {
    oracle.action.simulate(state)
}

/// If every output bit is of the form `c XOR (a . x)`, return the constant
/// bits and per-output input masks.
fn affine_decomposition(f: &BooleanFunction) -> Option<(u64, Vec<u64>)> {
    let n = f.n();
    let constants = f.evaluate(0);
    let mut masks = vec![0u64; f.m()];
    for (j, mask) in masks.iter_mut().enumerate() {
        for i in 0..n {
            let bit = (f.evaluate(1 << i) ^ constants) >> j & 1;
            *mask |= bit << i;
        }
    }
    for x in 0..1u64 << n {
        let mut expected = constants;
        for (j, mask) in masks.iter().enumerate() {
            expected ^= u64::from((mask & x).count_ones() & 1 == 1) << j;
        }
        if f.evaluate(x) != expected {
            return None;
        }
    }
    Some((constants, masks))
}
