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

use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] ppmsched_core::Error),
    #[error(transparent)]
    Qasm(#[from] crate::qasm::QasmError),
    #[error(transparent)]
    PpmText(#[from] crate::ppm_text::PpmTextError),
    #[error(transparent)]
    Sim(#[from] crate::sim::SimError),
    #[error("sweep config line {line}: {msg}")]
    Config { line: usize, msg: String },
    #[error("sweep cell (value {value_index}, trial {trial}): {source}")]
    Cell {
        value_index: usize,
        trial: usize,
        source: ppmsched_core::Error,
    },
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
