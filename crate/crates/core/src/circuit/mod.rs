//! Circuit intermediate representation.
//!
//! A [`Circuit`] is an ordered list of operations on a fixed-width register.
//! Simulating a circuit folds gate application over the list, which is the
//! usual right-to-left operator composition read in program order. Ops carry
//! an optional provenance tag naming the pattern that emitted them.

mod qasm;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sim::{Gate, StateVector};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Op {
    Gate(Gate),
    Measure { measure: Vec<usize> },
}

impl Op {
    pub fn name(&self) -> &'static str {
        match self {
            Op::Gate(g) => g.name(),
            Op::Measure { .. } => "measure",
        }
    }

    pub fn is_measurement(&self) -> bool {
        matches!(self, Op::Measure { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GateOp {
    #[serde(flatten)]
    pub op: Op,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tag: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Circuit {
    num_qubits: usize,
    ops: Vec<GateOp>,
}

impl Circuit {
    pub fn new(num_qubits: usize) -> Self {
        Circuit {
            num_qubits,
            ops: Vec::new(),
        }
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn ops(&self) -> &[GateOp] {
        &self.ops
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    pub fn push(&mut self, gate: Gate) -> Result<&mut Self> {
        self.push_tagged(gate, None)
    }

    pub fn push_tagged(&mut self, gate: Gate, tag: Option<&str>) -> Result<&mut Self> {
        gate.validate(self.num_qubits)?;
        self.ops.push(GateOp {
            op: Op::Gate(gate),
            tag: tag.map(str::to_string),
        });
        Ok(self)
    }

    pub fn push_measure(&mut self, qubits: &[usize]) -> Result<&mut Self> {
        for &q in qubits {
            if q >= self.num_qubits {
                return Err(Error::QubitOutOfRange {
                    index: q,
                    num_qubits: self.num_qubits,
                });
            }
        }
        self.ops.push(GateOp {
            op: Op::Measure {
                measure: qubits.to_vec(),
            },
            tag: None,
        });
        Ok(self)
    }

    /// Append another circuit of the same width.
    pub fn extend(&mut self, other: &Circuit) -> Result<&mut Self> {
        if other.num_qubits != self.num_qubits {
            return Err(Error::DimensionMismatch {
                expected: self.num_qubits,
                actual: other.num_qubits,
            });
        }
        self.ops.extend(other.ops.iter().cloned());
        Ok(self)
    }

    pub fn is_measurement_free(&self) -> bool {
        self.ops.iter().all(|op| !op.op.is_measurement())
    }

    fn first_measurement(&self) -> Option<usize> {
        self.ops.iter().position(|op| op.op.is_measurement())
    }

    /// Run the circuit on an input state. Measurement ops are not allowed
    /// here; sampling is a separate concern.
    pub fn simulate(&self, input: StateVector) -> Result<StateVector> {
        if input.num_qubits() != self.num_qubits {
            return Err(Error::DimensionMismatch {
                expected: self.num_qubits,
                actual: input.num_qubits(),
            });
        }
        if let Some(index) = self.first_measurement() {
            return Err(Error::MeasurementPresent { index });
        }
        let mut state = input;
        for op in &self.ops {
            if let Op::Gate(gate) = &op.op {
                state = state.apply(gate)?;
            }
        }
        Ok(state)
    }

    /// The inverse circuit: ops reversed, each gate replaced by its adjoint.
    pub fn inverse(&self) -> Result<Circuit> {
        if let Some(index) = self.first_measurement() {
            return Err(Error::MeasurementPresent { index });
        }
        let ops = self
            .ops
            .iter()
            .rev()
            .map(|op| match &op.op {
                Op::Gate(gate) => GateOp {
                    op: Op::Gate(gate.adjoint()),
                    tag: op.tag.clone(),
                },
                Op::Measure { .. } => unreachable!(),
            })
            .collect();
        Ok(Circuit {
            num_qubits: self.num_qubits,
            ops,
        })
    }

    /// The same circuit acting on a wider register, with every qubit index
    /// shifted up by `offset`.
    pub fn embed(&self, num_qubits: usize, offset: usize) -> Result<Circuit> {
        if offset + self.num_qubits > num_qubits {
            return Err(Error::DimensionMismatch {
                expected: num_qubits,
                actual: offset + self.num_qubits,
            });
        }
        let mut embedded = Circuit::new(num_qubits);
        for op in &self.ops {
            let shifted = match &op.op {
                Op::Gate(gate) => Op::Gate(shift_gate(gate, offset)),
                Op::Measure { measure } => Op::Measure {
                    measure: measure.iter().map(|q| q + offset).collect(),
                },
            };
            embedded.ops.push(GateOp {
                op: shifted,
                tag: op.tag.clone(),
            });
        }
        Ok(embedded)
    }

    /// Serialize to the structured circuit document.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("circuit serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Circuit> {
        let circuit: Circuit =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        for op in &circuit.ops {
            match &op.op {
                Op::Gate(gate) => gate.validate(circuit.num_qubits)?,
                Op::Measure { measure } => {
                    for &q in measure {
                        if q >= circuit.num_qubits {
                            return Err(Error::QubitOutOfRange {
                                index: q,
                                num_qubits: circuit.num_qubits,
                            });
                        }
                    }
                }
            }
        }
        Ok(circuit)
    }
}

fn shift_gate(gate: &Gate, offset: usize) -> Gate {
    match gate {
        Gate::H { target } => Gate::H {
            target: target + offset,
        },
        Gate::X { target } => Gate::X {
            target: target + offset,
        },
        Gate::Z { target } => Gate::Z {
            target: target + offset,
        },
        Gate::Phase { target, angle } => Gate::Phase {
            target: target + offset,
            angle: *angle,
        },
        Gate::Cnot { control, target } => Gate::Cnot {
            control: control + offset,
            target: target + offset,
        },
        Gate::Swap { a, b } => Gate::Swap {
            a: a + offset,
            b: b + offset,
        },
        Gate::Generic { targets, matrix } => Gate::Generic {
            targets: targets.iter().map(|t| t + offset).collect(),
            matrix: matrix.clone(),
        },
        Gate::Permutation { targets, map } => Gate::Permutation {
            targets: targets.iter().map(|t| t + offset).collect(),
            map: map.clone(),
        },
        Gate::Diagonal { targets, phases } => Gate::Diagonal {
            targets: targets.iter().map(|t| t + offset).collect(),
            phases: phases.clone(),
        },
    }
}
