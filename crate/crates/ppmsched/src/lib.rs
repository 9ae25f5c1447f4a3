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

//! Std companion to `ppmsched-core`: text formats, a dense-matrix
//! verification oracle, the random sweep harness, and result output.

pub mod error;
pub mod ppm_text;
pub mod qasm;
pub mod results;
pub mod sim;
pub mod sweep;

pub use error::{Error, Result};
