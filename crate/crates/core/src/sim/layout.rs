//! Register layouts: named partitions of a qubit register.
//!
//! Registers stack in tensor-product order: the computational register takes
//! the highest qubit indices, the workspace sits below it, and auxiliary
//! registers fill the remaining low indices in the order they were declared.
//! A state written `|computational>|workspace>|aux...>` therefore reads off
//! as one binary number under the crate's bit convention.

use std::ops::Range;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegisterLayout {
    computational: Range<usize>,
    workspace: Range<usize>,
    auxiliary: Vec<(String, Range<usize>)>,
}

impl RegisterLayout {
    /// A layout with only a computational register of `n` qubits.
    pub fn computational_only(n: usize) -> Result<Self> {
        Self::with_workspace(n, 0)
    }

    /// Computational register of `n` qubits above a workspace of `m`.
    pub fn with_workspace(n: usize, m: usize) -> Result<Self> {
        Self::with_auxiliary(n, m, &[])
    }

    /// Computational register, workspace, then the listed auxiliary
    /// registers stacked downward to qubit 0.
    pub fn with_auxiliary(n: usize, m: usize, auxiliary: &[(&str, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadLayout {
                reason: "computational register must hold at least one qubit".into(),
            });
        }
        let aux_total: usize = auxiliary.iter().map(|(_, size)| size).sum();
        let mut floor = aux_total + m + n;
        let computational = floor - n..floor;
        floor -= n;
        let workspace = floor - m..floor;
        floor -= m;
        let mut named = Vec::with_capacity(auxiliary.len());
        for (name, size) in auxiliary {
            if *size == 0 {
                return Err(Error::BadLayout {
                    reason: format!("auxiliary register {name} is empty"),
                });
            }
            named.push((name.to_string(), floor - size..floor));
            floor -= size;
        }
        debug_assert_eq!(floor, 0);
        Ok(RegisterLayout {
            computational,
            workspace,
            auxiliary: named,
        })
    }

    pub fn total_qubits(&self) -> usize {
        self.computational.end
    }

    /// Size of the computational register (the customary `n`).
    pub fn n(&self) -> usize {
        self.computational.len()
    }

    /// Size of the workspace register (the customary `m`).
    pub fn m(&self) -> usize {
        self.workspace.len()
    }

    pub fn computational_range(&self) -> Range<usize> {
        self.computational.clone()
    }

    pub fn workspace_range(&self) -> Range<usize> {
        self.workspace.clone()
    }

    pub fn computational_qubits(&self) -> Vec<usize> {
        self.computational.clone().collect()
    }

    pub fn workspace_qubits(&self) -> Vec<usize> {
        self.workspace.clone().collect()
    }

    pub fn auxiliary(&self, name: &str) -> Option<Range<usize>> {
        self.auxiliary
            .iter()
            .find(|(reg, _)| reg == name)
            .map(|(_, range)| range.clone())
    }

    pub fn auxiliary_registers(&self) -> &[(String, Range<usize>)] {
        &self.auxiliary
    }

    /// All qubit indices of every register, for whole-register operations.
    pub fn all_qubits(&self) -> Vec<usize> {
        (0..self.total_qubits()).collect()
    }
}
