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

use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right} qubits")]
    DimensionMismatch { left: usize, right: usize },
    #[error("qubit {qubit} out of range for {n_qubits} qubits")]
    QubitOutOfRange { qubit: usize, n_qubits: usize },
    #[error("invalid gate: {0}")]
    InvalidGate(String),
    #[error("operators {0} and {1} do not commute")]
    NotCommuting(usize, usize),
    #[error("measurement at op {0} is followed by further gates")]
    MidCircuitMeasurement(usize),
    #[error("invalid port budget ({bx}, {bz}): both entries must be at least 1")]
    InvalidBudget { bx: u32, bz: u32 },
    #[error("clique of size {size} exceeds the enumeration limit of {limit}")]
    CliqueTooLarge { size: usize, limit: usize },
    #[error("invalid random spec: {0}")]
    InvalidSpec(&'static str),
    #[error("invalid circuit: {0}")]
    InvalidCircuit(String),
    #[error("grouping index {index} out of range for {len} operators")]
    GroupingIndex { index: usize, len: usize },
}
