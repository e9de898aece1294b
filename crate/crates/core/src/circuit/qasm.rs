//! OpenQASM 2.0 export.
//!
//! Only gates with a direct qelib1 spelling are emitted: h, x, z, u1
//! (phase), cx and swap, plus measure. Generic, permutation and diagonal ops
//! are simulation-only and are rejected with the offending op index. Output
//! is deterministic: fixed header, one op per line, angles printed with 12
//! significant digits, provenance tags as comment lines.

use std::fmt::Write;

use crate::circuit::{Circuit, Op};
use crate::error::{Error, Result};
use crate::sim::Gate;

/// Angle literal with 12 significant digits, e.g. `1.57079632679e0`.
fn format_angle(angle: f64) -> String {
    if angle == 0.0 {
        return "0.0".to_string();
    }
    format!("{angle:.11e}")
}

impl Circuit {
    /// Emit OpenQASM 2.0 text for this circuit.
    pub fn to_qasm(&self) -> Result<String> {
        let mut body = String::new();
        let mut current_tag: Option<&str> = None;
        let mut has_measure = false;
        for (index, op) in self.ops().iter().enumerate() {
            let tag = op.tag.as_deref();
            if let Some(label) = tag {
                if tag != current_tag {
                    writeln!(body, "// {label}").unwrap();
                }
            }
            current_tag = tag;
            match &op.op {
                Op::Gate(gate) => match gate {
                    Gate::H { target } => writeln!(body, "h q[{target}];").unwrap(),
                    Gate::X { target } => writeln!(body, "x q[{target}];").unwrap(),
                    Gate::Z { target } => writeln!(body, "z q[{target}];").unwrap(),
                    Gate::Phase { target, angle } => {
                        writeln!(body, "u1({}) q[{target}];", format_angle(*angle)).unwrap()
                    }
                    Gate::Cnot { control, target } => {
                        writeln!(body, "cx q[{control}],q[{target}];").unwrap()
                    }
                    Gate::Swap { a, b } => writeln!(body, "swap q[{a}],q[{b}];").unwrap(),
                    Gate::Generic { .. } | Gate::Permutation { .. } | Gate::Diagonal { .. } => {
                        return Err(Error::QasmUnsupported {
                            index,
                            gate: gate.name().to_string(),
                        })
                    }
                },
                Op::Measure { measure } => {
                    has_measure = true;
                    for q in measure {
                        writeln!(body, "measure q[{q}] -> c[{q}];").unwrap();
                    }
                }
            }
        }

        let mut text = String::new();
        writeln!(text, "OPENQASM 2.0;").unwrap();
        writeln!(text, "include \"qelib1.inc\";").unwrap();
        writeln!(text, "qreg q[{}];", self.num_qubits()).unwrap();
        if has_measure {
            writeln!(text, "creg c[{}];", self.num_qubits()).unwrap();
        }
        text.push_str(&body);
        Ok(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_circuit_qasm() {
        let mut c = Circuit::new(2);
        c.push(Gate::H { target: 0 }).unwrap();
        c.push(Gate::Cnot {
            control: 0,
            target: 1,
        })
        .unwrap();
        let qasm = c.to_qasm().unwrap();
        assert_eq!(
            qasm,
            "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\nh q[0];\ncx q[0],q[1];\n"
        );
    }

    #[test]
    fn export_is_byte_stable() {
        let mut c = Circuit::new(1);
        c.push_tagged(Gate::H { target: 0 }, Some("superposition"))
            .unwrap();
        c.push(Gate::Phase {
            target: 0,
            angle: std::f64::consts::FRAC_PI_2,
        })
        .unwrap();
        assert_eq!(c.to_qasm().unwrap(), c.to_qasm().unwrap());
        assert!(c.to_qasm().unwrap().contains("u1(1.57079632679e0) q[0];"));
        assert!(c.to_qasm().unwrap().contains("// superposition\n"));
    }

    #[test]
    fn permutation_op_rejected_with_index() {
        let mut c = Circuit::new(2);
        c.push(Gate::H { target: 0 }).unwrap();
        c.push(Gate::Permutation {
            targets: vec![0, 1],
            map: vec![0, 1, 3, 2],
        })
        .unwrap();
        match c.to_qasm().unwrap_err() {
            Error::QasmUnsupported { index, gate } => {
                assert_eq!(index, 1);
                assert_eq!(gate, "permutation");
            }
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn measurement_declares_creg() {
        let mut c = Circuit::new(1);
        c.push(Gate::H { target: 0 }).unwrap();
        c.push_measure(&[0]).unwrap();
        let qasm = c.to_qasm().unwrap();
        assert!(qasm.contains("creg c[1];"));
        assert!(qasm.contains("measure q[0] -> c[0];"));
    }
}
