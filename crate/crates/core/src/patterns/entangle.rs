//! Entanglement creation through a function oracle.
//!
//! Superposing the input register and applying the XOR oracle of a
//! non-constant function entangles input and value registers. A constant
//! function yields a product state, so the outcome carries an explicit
//! entanglement flag instead of silently claiming entanglement.

use crate::circuit::Circuit;
use crate::error::Result;
use crate::patterns::boolean::BooleanFunction;
use crate::patterns::table::{function_table, function_table_circuit};
use crate::sim::StateVector;

#[derive(Debug, Clone)]
pub struct EntanglementOutcome {
    pub state: StateVector,
    /// Separability verdict across the input|value cut.
    pub entangled: bool,
}

pub fn create_entanglement(f: &BooleanFunction) -> Result<EntanglementOutcome> {
    let state = function_table(f)?;
    let value_register: Vec<usize> = (0..f.m()).collect();
    let entangled = !state.is_separable(&value_register)?;
    Ok(EntanglementOutcome { state, entangled })
}

pub fn entanglement_circuit(f: &BooleanFunction) -> Result<Circuit> {
    function_table_circuit(f)
}
