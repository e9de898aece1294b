//! Dense state-vector simulation: states, register layouts, gates,
//! measurement and separability analysis.

mod apply;
pub mod gate;
pub mod layout;
mod measure;
mod schmidt;
pub mod state;

pub use gate::{Gate, UNITARY_TOL};
pub use layout::RegisterLayout;
pub use schmidt::SEPARABILITY_TOL;
pub use state::{
    format_bits, qubit_cap, set_qubit_cap, StateVector, DEFAULT_QUBIT_CAP, NORM_TOL,
};
