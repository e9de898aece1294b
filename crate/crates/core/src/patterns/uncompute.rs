//! The copy-uncompute protocol for clearing garbage registers.
//!
//! Given a circuit `f_impl` taking `|x>|0>|0>` to `sum_y a_y |x>|y>|f(x)>`
//! on (input, workspace, result) registers, the protocol produces
//! `|x>|0>|f(x)>` and extends linearly to superposed inputs:
//!
//! 1. apply `f_impl`;
//! 2. append a copy register of the result's width, initialized to |0>;
//! 3. copy the result into it with bitwise CNOTs;
//! 4. apply the inverse of `f_impl`, clearing workspace and result;
//! 5. swap result and copy registers;
//! 6. discard the copy register, which is now |0> and separable.
//!
//! The discard step is checked, not assumed: discarding an entangled
//! register is refused by the simulator.

use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::sim::{Gate, RegisterLayout, StateVector};

/// Register sizes for an uncompute run: the layout's computational register
/// is the input x, its workspace is the garbage register, and it must carry
/// exactly one auxiliary register holding the result.
fn registers(layout: &RegisterLayout, f_impl: &Circuit) -> Result<(usize, usize, usize)> {
    let [(_, result_range)] = layout.auxiliary_registers() else {
        return Err(Error::BadLayout {
            reason: "uncompute needs exactly one auxiliary (result) register".into(),
        });
    };
    let n = layout.n();
    let w = layout.m();
    let m = result_range.len();
    if layout.total_qubits() != f_impl.num_qubits() {
        return Err(Error::DimensionMismatch {
            expected: layout.total_qubits(),
            actual: f_impl.num_qubits(),
        });
    }
    Ok((n, w, m))
}

/// Run the protocol on `input`, a state over (input, workspace, result)
/// prepared before `f_impl` (workspace and result at |0>).
pub fn uncompute(
    f_impl: &Circuit,
    layout: &RegisterLayout,
    input: StateVector,
) -> Result<StateVector> {
    let (_, _, m) = registers(layout, f_impl)?;
    if input.num_qubits() != f_impl.num_qubits() {
        return Err(Error::DimensionMismatch {
            expected: f_impl.num_qubits(),
            actual: input.num_qubits(),
        });
    }
    let protocol = uncompute_circuit(f_impl, layout)?;
    let extended = input.tensor(&StateVector::zero(m)?)?;
    let cleaned = protocol.simulate(extended)?;
    let copy_register: Vec<usize> = (0..m).collect();
    cleaned.discard(&copy_register)
}

/// The unitary part of the protocol (steps 1-5) on the widened register,
/// with the copy register on the low qubits. Simulate it on
/// `input (x) |0..0>` and discard the copy register to reproduce
/// [`uncompute`].
pub fn uncompute_circuit(f_impl: &Circuit, layout: &RegisterLayout) -> Result<Circuit> {
    if let Some(index) = f_impl
        .ops()
        .iter()
        .position(|op| op.op.is_measurement())
    {
        return Err(Error::MeasurementPresent { index });
    }
    let (n, w, m) = registers(layout, f_impl)?;
    let total = n + w + m + m;

    let mut protocol = Circuit::new(total);
    protocol.extend(&f_impl.embed(total, m)?)?;
    // result register sits at qubits m..2m after the shift, copy at 0..m
    for j in 0..m {
        protocol.push_tagged(
            Gate::Cnot {
                control: m + j,
                target: j,
            },
            Some("uncompute"),
        )?;
    }
    protocol.extend(&f_impl.inverse()?.embed(total, m)?)?;
    for j in 0..m {
        protocol.push_tagged(Gate::Swap { a: m + j, b: j }, Some("uncompute"))?;
    }
    Ok(protocol)
}
