//! Register initialization.

use num_complex::Complex64;

use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::sim::{Gate, RegisterLayout, StateVector};

#[derive(Debug, Clone)]
pub enum InitMode {
    /// The all-zeros basis state.
    AllZeros,
    /// Computational register |0...0>, one-qubit workspace set to |1> for
    /// sign-based set membership readout.
    IndicatorAncilla,
    /// A named basis state, written highest qubit leftmost.
    Bitstring(String),
    /// Load an amplitude vector (normalized here) onto the computational
    /// register, workspace and auxiliaries left at |0...0>.
    Amplitudes(Vec<Complex64>),
}

pub fn initialize(layout: &RegisterLayout, mode: &InitMode) -> Result<StateVector> {
    let total = layout.total_qubits();
    match mode {
        InitMode::AllZeros => StateVector::zero(total),
        InitMode::IndicatorAncilla => {
            let index = indicator_index(layout)?;
            StateVector::basis(total, index)
        }
        InitMode::Bitstring(bits) => StateVector::basis(total, parse_bits(bits, total)?),
        InitMode::Amplitudes(amps) => {
            let n = layout.n();
            if amps.len() != 1 << n {
                return Err(Error::BadAmplitudeCount { len: amps.len() });
            }
            let computational = StateVector::from_unnormalized(amps.clone())?;
            if total == n {
                return Ok(computational);
            }
            computational.tensor(&StateVector::zero(total - n)?)
        }
    }
}

/// The gate realization of an initialization from |0...0>. Amplitude
/// loading has no gate form here.
pub fn initialize_circuit(layout: &RegisterLayout, mode: &InitMode) -> Result<Circuit> {
    let total = layout.total_qubits();
    let mut circuit = Circuit::new(total);
    match mode {
        InitMode::AllZeros => {}
        InitMode::IndicatorAncilla => {
            let index = indicator_index(layout)?;
            circuit.push_tagged(
                Gate::X {
                    target: index.trailing_zeros() as usize,
                },
                Some("initialization"),
            )?;
        }
        InitMode::Bitstring(bits) => {
            let index = parse_bits(bits, total)?;
            for q in 0..total {
                if index >> q & 1 == 1 {
                    circuit.push_tagged(Gate::X { target: q }, Some("initialization"))?;
                }
            }
        }
        InitMode::Amplitudes(_) => {
            return Err(Error::NotRecordable {
                pattern: "initialization (amplitude loading)".into(),
            })
        }
    }
    Ok(circuit)
}

fn indicator_index(layout: &RegisterLayout) -> Result<u64> {
    if layout.m() != 1 {
        return Err(Error::IndicatorAncillaArity { m: layout.m() });
    }
    Ok(1 << layout.workspace_range().start)
}

fn parse_bits(bits: &str, total: usize) -> Result<u64> {
    if bits.len() != total || bits.bytes().any(|b| b != b'0' && b != b'1') {
        return Err(Error::BadBitstring {
            given: bits.to_string(),
            expected: total,
        });
    }
    Ok(u64::from_str_radix(bits, 2).expect("validated binary literal"))
}
