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

//! Gate-level, rotation-level and measurement-level circuit representations.

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::FRAC_PI_8;

use crate::clifford::CliffordGate;
use crate::error::{Error, Result};
use crate::pauli::{PauliLetter, PauliString, WeightScope};

/// Angle of a rotation `exp(-iθP)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RotationAngle {
    /// θ = π/8.
    T,
    /// θ = -π/8.
    Tdg,
    /// Arbitrary θ in radians. The gate `rz(λ)` becomes `Rz(λ/2)`.
    Rz(f64),
}

impl RotationAngle {
    pub fn theta(&self) -> f64 {
        match *self {
            RotationAngle::T => FRAC_PI_8,
            RotationAngle::Tdg => -FRAC_PI_8,
            RotationAngle::Rz(t) => t,
        }
    }

    pub fn negated(&self) -> RotationAngle {
        match *self {
            RotationAngle::T => RotationAngle::Tdg,
            RotationAngle::Tdg => RotationAngle::T,
            RotationAngle::Rz(t) => RotationAngle::Rz(-t),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum GateOp {
    Clifford(CliffordGate),
    /// `exp(-iθ Z_qubit)`.
    Rotation {
        qubit: usize,
        angle: RotationAngle,
    },
    Measure(usize),
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct GateCircuit {
    n_qubits: usize,
    ops: Vec<GateOp>,
}

impl GateCircuit {
    pub fn new(n_qubits: usize) -> Self {
        GateCircuit {
            n_qubits,
            ops: Vec::new(),
        }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn ops(&self) -> &[GateOp] {
        &self.ops
    }

    pub fn push(&mut self, op: GateOp) -> Result<()> {
        match &op {
            GateOp::Clifford(g) => g.validate(self.n_qubits)?,
            GateOp::Rotation { qubit, angle } => {
                self.check_qubit(*qubit)?;
                if !angle.theta().is_finite() {
                    return Err(Error::InvalidCircuit(format!(
                        "non-finite rotation angle on qubit {qubit}"
                    )));
                }
            }
            GateOp::Measure(q) => self.check_qubit(*q)?,
        }
        self.ops.push(op);
        Ok(())
    }

    pub fn clifford(&mut self, g: CliffordGate) -> Result<()> {
        self.push(GateOp::Clifford(g))
    }

    pub fn rotation(&mut self, qubit: usize, angle: RotationAngle) -> Result<()> {
        self.push(GateOp::Rotation { qubit, angle })
    }

    pub fn measure(&mut self, qubit: usize) -> Result<()> {
        self.push(GateOp::Measure(qubit))
    }

    fn check_qubit(&self, qubit: usize) -> Result<()> {
        if qubit >= self.n_qubits {
            return Err(Error::QubitOutOfRange {
                qubit,
                n_qubits: self.n_qubits,
            });
        }
        Ok(())
    }

    pub fn rotation_count(&self) -> usize {
        self.ops
            .iter()
            .filter(|op| matches!(op, GateOp::Rotation { .. }))
            .count()
    }
}

/// Pauli product rotation `exp(-iθP)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Ppr {
    pub pauli: PauliString,
    pub angle: RotationAngle,
}

/// Pauli product measurement over program ⊕ resource columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ppm {
    pub pauli: PauliString,
    /// Resource qubit consumed by this measurement, if it came from a rotation.
    pub resource: Option<usize>,
}

/// Ordered PPM sequence. Column `n_program_qubits + k` is resource qubit `k`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PpmCircuit {
    n_program_qubits: usize,
    n_resource_qubits: usize,
    ppms: Vec<Ppm>,
}

impl PpmCircuit {
    /// Builds and validates a circuit: every string spans all columns, each
    /// resource index is used exactly once, and a measurement carrying a
    /// resource index has `Z` there and `I` on every other resource column.
    pub fn new(n_program_qubits: usize, n_resource_qubits: usize, ppms: Vec<Ppm>) -> Result<Self> {
        let c = PpmCircuit {
            n_program_qubits,
            n_resource_qubits,
            ppms,
        };
        c.validate()?;
        Ok(c)
    }

    /// A circuit without resource qubits.
    pub fn from_paulis(n_program_qubits: usize, paulis: Vec<PauliString>) -> Result<Self> {
        let ppms = paulis.into_iter().map(|pauli| Ppm { pauli, resource: None }).collect();
        Self::new(n_program_qubits, 0, ppms)
    }

    fn validate(&self) -> Result<()> {
        let width = self.width();
        let mut seen = alloc::vec![false; self.n_resource_qubits];
        for (i, ppm) in self.ppms.iter().enumerate() {
            if ppm.pauli.n_qubits() != width {
                return Err(Error::DimensionMismatch {
                    left: width,
                    right: ppm.pauli.n_qubits(),
                });
            }
            let tail: Vec<usize> = ppm
                .pauli
                .support()
                .filter(|&j| j >= self.n_program_qubits)
                .map(|j| j - self.n_program_qubits)
                .collect();
            match ppm.resource {
                Some(k) => {
                    if k >= self.n_resource_qubits {
                        return Err(Error::InvalidCircuit(format!(
                            "measurement {i} uses resource {k} but only {} exist",
                            self.n_resource_qubits
                        )));
                    }
                    if seen[k] {
                        return Err(Error::InvalidCircuit(format!("resource {k} used twice")));
                    }
                    seen[k] = true;
                    if tail != [k] || ppm.pauli.letter(self.n_program_qubits + k) != PauliLetter::Z {
                        return Err(Error::InvalidCircuit(format!(
                            "measurement {i} must carry exactly Z on resource {k}"
                        )));
                    }
                }
                None => {
                    if !tail.is_empty() {
                        return Err(Error::InvalidCircuit(format!(
                            "measurement {i} touches resource columns without a resource index"
                        )));
                    }
                }
            }
        }
        if let Some(k) = seen.iter().position(|used| !used) {
            return Err(Error::InvalidCircuit(format!("resource {k} is never used")));
        }
        Ok(())
    }

    pub fn n_program_qubits(&self) -> usize {
        self.n_program_qubits
    }

    pub fn n_resource_qubits(&self) -> usize {
        self.n_resource_qubits
    }

    /// Total column count, program plus resource.
    pub fn width(&self) -> usize {
        self.n_program_qubits + self.n_resource_qubits
    }

    pub fn ppms(&self) -> &[Ppm] {
        &self.ppms
    }

    pub fn len(&self) -> usize {
        self.ppms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ppms.is_empty()
    }

    pub fn paulis(&self) -> Vec<PauliString> {
        self.ppms.iter().map(|m| m.pauli.clone()).collect()
    }

    pub fn program_scope(&self) -> WeightScope {
        WeightScope::Program(self.n_program_qubits)
    }
}
