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

//! Scheduling of Pauli product measurements (PPMs) for lattice surgery under
//! per-qubit X/Z port budgets.
//!
//! The pipeline is:
//!
//! 1. [`pbc::compile_to_pprs`] pushes every Clifford gate of a Clifford+T/Rz
//!    circuit to the end, leaving a sequence of Pauli product rotations.
//! 2. [`pbc::attach_resource_states`] turns each rotation into a measurement
//!    with a `Z` on a fresh resource qubit.
//! 3. [`grouping`] partitions the measurement sequence into commuting,
//!    port-feasible time steps.
//! 4. [`optimize`] lowers that depth by reshuffling commuting neighbours and by
//!    rewriting each commuting group into an equivalent generating set.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod circuit;
pub mod clifford;
mod error;
pub mod grouping;
pub mod optimize;
pub mod pauli;
pub mod pbc;
pub mod random;

pub use error::{Error, Result};
pub use grouping::{Grouping, PortBudget, PortDemand};
pub use pauli::{PauliLetter, PauliString};
