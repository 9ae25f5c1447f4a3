// Copyright 2026 The ppmsched Authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except
// in compliance with the License. You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License
// is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express
// or implied. See the License for the specific language governing permissions and limitations under
// the License.

//! Pauli-based computation: push Cliffords to the end, then turn rotations
//! into measurements on fresh resource qubits.

use alloc::vec::Vec;

use crate::circuit::{GateCircuit, GateOp, Ppm, PpmCircuit, Ppr};
use crate::clifford::CliffordTableau;
use crate::error::{Error, Result};
use crate::pauli::{PauliLetter, PauliString};

/// A circuit rewritten as rotations followed by one Clifford and terminal
/// measurements. The original unitary equals `final_clifford · R_m ⋯ R_1`.
#[derive(Debug, Clone)]
pub struct PbcProgram {
    pub n_qubits: usize,
    pub pprs: Vec<Ppr>,
    pub final_clifford: CliffordTableau,
    /// Measured observables, already pulled back through `final_clifford`.
    pub terminal_measurements: Vec<PauliString>,
}

impl PbcProgram {
    pub fn to_ppm_circuit(&self) -> Result<PpmCircuit> {
        attach_resource_states(self.n_qubits, &self.pprs, &self.terminal_measurements)
    }
}

pub fn compile_to_pprs(circuit: &GateCircuit) -> Result<PbcProgram> {
    let n = circuit.n_qubits();
    let mut frame = CliffordTableau::identity(n);
    let mut pprs = Vec::new();
    let mut terminal = Vec::new();
    let mut first_measure = None;
    for (i, op) in circuit.ops().iter().enumerate() {
        if let (Some(m), false) = (first_measure, matches!(op, GateOp::Measure(_))) {
            return Err(Error::MidCircuitMeasurement(m));
        }
        match op {
            GateOp::Clifford(g) => frame.append(*g)?,
            GateOp::Rotation { qubit, angle } => {
                let axis = PauliString::single(n, *qubit, PauliLetter::Z)?;
                let mut pauli = frame.conjugate(&axis)?;
                let mut angle = *angle;
                if pauli.is_negative() {
                    pauli.set_phase_exp(0);
                    angle = angle.negated();
                }
                pprs.push(Ppr { pauli, angle });
            }
            GateOp::Measure(q) => {
                first_measure.get_or_insert(i);
                let axis = PauliString::single(n, *q, PauliLetter::Z)?;
                terminal.push(frame.conjugate(&axis)?);
            }
        }
    }
    Ok(PbcProgram {
        n_qubits: n,
        pprs,
        final_clifford: frame,
        terminal_measurements: terminal,
    })
}

/// Rotation `i` becomes the measurement `P_i ⊗ Z` on resource column `i`;
/// terminal measurements follow with no resource tail.
pub fn attach_resource_states(n_program_qubits: usize, pprs: &[Ppr], terminal: &[PauliString]) -> Result<PpmCircuit> {
    let r = pprs.len();
    let width = n_program_qubits + r;
    let mut ppms = Vec::with_capacity(r + terminal.len());
    for (i, ppr) in pprs.iter().enumerate() {
        check_width(n_program_qubits, &ppr.pauli)?;
        let mut pauli = ppr.pauli.padded(width);
        pauli.set_letter(n_program_qubits + i, PauliLetter::Z);
        ppms.push(Ppm {
            pauli,
            resource: Some(i),
        });
    }
    for m in terminal {
        check_width(n_program_qubits, m)?;
        ppms.push(Ppm {
            pauli: m.padded(width),
            resource: None,
        });
    }
    PpmCircuit::new(n_program_qubits, r, ppms)
}

fn check_width(n: usize, p: &PauliString) -> Result<()> {
    if p.n_qubits() != n {
        return Err(Error::DimensionMismatch {
            left: n,
            right: p.n_qubits(),
        });
    }
    Ok(())
}
