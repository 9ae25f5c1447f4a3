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

//! Result rows and their CSV / JSON-lines encodings.

use std::io::{Read, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use ppmsched_core::optimize::{StrategyConfig, StrategyOutcome};

use crate::error::Result;

/// One (instance, strategy) measurement. Column order is the CSV header.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRow {
    pub strategy: String,
    pub seed: u64,
    pub n_qubits: usize,
    pub density: f64,
    pub n_ppms: usize,
    pub bx: u32,
    pub bz: u32,
    pub passes: usize,
    pub depth: usize,
    pub baseline_depth: usize,
    pub depth_reduction_pct: f64,
    pub total_weight: usize,
    pub baseline_weight: usize,
    pub weight_reduction_pct: f64,
    pub runtime_ms: f64,
}

impl ResultRow {
    pub const HEADER: [&'static str; 15] = [
        "strategy",
        "seed",
        "n_qubits",
        "density",
        "n_ppms",
        "bx",
        "bz",
        "passes",
        "depth",
        "baseline_depth",
        "depth_reduction_pct",
        "total_weight",
        "baseline_weight",
        "weight_reduction_pct",
        "runtime_ms",
    ];
}

/// Instance description shared by every row of one instance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InstanceInfo {
    pub seed: u64,
    pub n_qubits: usize,
    pub density: f64,
    pub n_ppms: usize,
}

/// `100 · (before − after) / before`, or 0 when `before` is 0.
pub fn reduction_pct(before: usize, after: usize) -> f64 {
    if before == 0 {
        0.0
    } else {
        100.0 * (before as f64 - after as f64) / before as f64
    }
}

pub fn make_row(
    info: &InstanceInfo,
    cfg: &StrategyConfig,
    outcome: &StrategyOutcome,
    baseline: &StrategyOutcome,
    runtime_ms: f64,
) -> ResultRow {
    let (depth, base_depth) = (outcome.metrics.depth, baseline.metrics.depth);
    let (weight, base_weight) = (
        outcome.metrics.total_weight_program,
        baseline.metrics.total_weight_program,
    );
    ResultRow {
        strategy: cfg.strategy.to_string(),
        seed: info.seed,
        n_qubits: info.n_qubits,
        density: info.density,
        n_ppms: info.n_ppms,
        bx: cfg.budget.bx(),
        bz: cfg.budget.bz(),
        passes: cfg.passes,
        depth,
        baseline_depth: base_depth,
        depth_reduction_pct: reduction_pct(base_depth, depth),
        total_weight: weight,
        baseline_weight: base_weight,
        weight_reduction_pct: reduction_pct(base_weight, weight),
        runtime_ms,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Csv,
    JsonLines,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json-lines" | "jsonl" => Ok(OutputFormat::JsonLines),
            _ => Err(format!("unknown output format `{s}` (expected csv or json-lines)")),
        }
    }
}

pub fn write_csv<W: Write>(rows: &[ResultRow], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(ResultRow::HEADER)?;
    for row in rows {
        w.serialize(row)?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn write_json_lines<W: Write>(rows: &[ResultRow], mut out: W) -> Result<()> {
    for row in rows {
        serde_json::to_writer(&mut out, row)?;
        out.write_all(b"\n").map_err(serde_json::Error::io)?;
    }
    Ok(())
}

pub fn emit_results<W: Write>(rows: &[ResultRow], format: OutputFormat, out: W) -> Result<()> {
    match format {
        OutputFormat::Csv => write_csv(rows, out),
        OutputFormat::JsonLines => write_json_lines(rows, out),
    }
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<ResultRow>> {
    let mut r = csv::Reader::from_reader(input);
    let rows = r.deserialize().collect::<std::result::Result<Vec<ResultRow>, _>>()?;
    Ok(rows)
}
