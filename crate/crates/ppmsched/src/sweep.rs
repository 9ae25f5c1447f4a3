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

//! Parameter sweeps over random PPM instances.
//!
//! A sweep varies one axis over a list of values; every (value, trial) cell
//! draws one instance and runs every configured strategy on it. Seeds are
//! derived from the master seed and the cell coordinates, so a cell can be
//! reproduced alone and the output does not depend on thread scheduling.

use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use ppmsched_core::optimize::{run_strategy, Mapper, PassMode, Strategy, StrategyConfig};
use ppmsched_core::random::{derive_seed, gen_random_ppms, RandomSpec};
use ppmsched_core::PortBudget;

use crate::error::{Error, Result};
use crate::results::{make_row, InstanceInfo, ResultRow};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Density,
    Qubits,
    InputDepth,
    Ports,
    Passes,
}

impl Axis {
    /// Axes that leave the random instance unchanged across values.
    pub fn keeps_instance(&self) -> bool {
        matches!(self, Axis::Ports | Axis::Passes)
    }
}

impl FromStr for Axis {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "density" => Ok(Axis::Density),
            "qubits" => Ok(Axis::Qubits),
            "input-depth" | "depth" | "ppms" => Ok(Axis::InputDepth),
            "ports" => Ok(Axis::Ports),
            "passes" => Ok(Axis::Passes),
            _ => Err(format!("unknown axis `{s}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub axis: Axis,
    pub values: Vec<f64>,
    pub trials: usize,
    /// Instance shape before the axis value is applied; `seed` is the master seed.
    pub base: RandomSpec,
    pub strategies: Vec<StrategyConfig>,
    /// Record wall-clock time per row. Off by default so output is reproducible.
    pub record_runtime: bool,
}

impl SweepConfig {
    /// All four strategies with the given shared settings.
    pub fn with_all_strategies(
        axis: Axis,
        values: Vec<f64>,
        trials: usize,
        base: RandomSpec,
        shared: StrategyConfig,
    ) -> Self {
        SweepConfig {
            axis,
            values,
            trials,
            base,
            strategies: Strategy::ALL
                .iter()
                .map(|&strategy| StrategyConfig { strategy, ..shared })
                .collect(),
            record_runtime: false,
        }
    }

    fn validate(&self) -> std::result::Result<(), String> {
        if self.values.is_empty() {
            return Err("values must not be empty".into());
        }
        if self.trials == 0 {
            return Err("trials must be at least 1".into());
        }
        if self.strategies.is_empty() {
            return Err("at least one strategy is required".into());
        }
        for &v in &self.values {
            match self.axis {
                Axis::Density if !(v > 0.0 && v <= 1.0) => {
                    return Err(format!("density value {v} outside (0, 1]"));
                }
                Axis::Qubits | Axis::InputDepth | Axis::Ports if !(v >= 1.0 && v.fract() == 0.0) => {
                    return Err(format!("value {v} must be a positive integer"));
                }
                Axis::Passes if !(v >= 0.0 && v.fract() == 0.0) => {
                    return Err(format!("passes value {v} must be a non-negative integer"));
                }
                _ => {}
            }
        }
        Ok(())
    }

    /// Instance spec and strategy list for one cell.
    fn cell(&self, value_index: usize, trial: usize) -> (RandomSpec, Vec<StrategyConfig>) {
        let v = self.values[value_index];
        let master = self.base.seed;
        let coord = if self.axis.keeps_instance() {
            u64::MAX
        } else {
            value_index as u64
        };
        let mut spec = RandomSpec {
            seed: derive_seed(master, &[coord, trial as u64]),
            ..self.base
        };
        match self.axis {
            Axis::Density => spec.density = v,
            Axis::Qubits => spec.n_qubits = v as usize,
            Axis::InputDepth => spec.n_ppms = v as usize,
            Axis::Ports | Axis::Passes => {}
        }
        let strategies = self
            .strategies
            .iter()
            .enumerate()
            .map(|(k, s)| {
                let mut s = *s;
                s.seed = derive_seed(master, &[coord, trial as u64, k as u64, 1]);
                match self.axis {
                    Axis::Ports => s.budget = PortBudget::new(v as u32, v as u32).expect("validated"),
                    Axis::Passes => s.passes = v as usize,
                    _ => {}
                }
                s
            })
            .collect();
        (spec, strategies)
    }
}

fn run_cell(
    cfg: &SweepConfig,
    value_index: usize,
    trial: usize,
) -> std::result::Result<Vec<ResultRow>, ppmsched_core::Error> {
    let (spec, strategies) = cfg.cell(value_index, trial);
    let circuit = gen_random_ppms(&spec)?;
    let info = InstanceInfo {
        seed: spec.seed,
        n_qubits: spec.n_qubits,
        density: spec.density,
        n_ppms: spec.n_ppms,
    };
    // The baseline is computed once per distinct budget in the cell.
    let mut baselines: Vec<(PortBudget, ppmsched_core::optimize::StrategyOutcome)> = Vec::new();
    let mut rows = Vec::with_capacity(strategies.len());
    for s in &strategies {
        if !baselines.iter().any(|(b, _)| *b == s.budget) {
            let base_cfg = StrategyConfig {
                strategy: Strategy::Baseline,
                ..*s
            };
            baselines.push((s.budget, run_strategy(&circuit, &base_cfg)?));
        }
        let baseline = &baselines.iter().find(|(b, _)| *b == s.budget).expect("just inserted").1;
        let start = Instant::now();
        let outcome = if s.strategy == Strategy::Baseline {
            baseline.clone()
        } else {
            run_strategy(&circuit, s)?
        };
        let runtime_ms = if cfg.record_runtime {
            start.elapsed().as_secs_f64() * 1e3
        } else {
            0.0
        };
        rows.push(make_row(&info, s, &outcome, baseline, runtime_ms));
    }
    Ok(rows)
}

/// Runs every cell (in parallel) and returns rows ordered by value index,
/// trial, then strategy position.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<ResultRow>> {
    cfg.validate().map_err(|msg| Error::Config { line: 0, msg })?;
    let cells: Vec<(usize, usize)> = (0..cfg.values.len())
        .flat_map(|v| (0..cfg.trials).map(move |t| (v, t)))
        .collect();
    let per_cell: Vec<Vec<ResultRow>> = cells
        .par_iter()
        .map(|&(v, t)| {
            run_cell(cfg, v, t).map_err(|source| Error::Cell {
                value_index: v,
                trial: t,
                source,
            })
        })
        .collect::<Result<_>>()?;
    Ok(per_cell.into_iter().flatten().collect())
}

/// [`run_sweep`] on a dedicated pool of `threads` workers.
pub fn run_sweep_with_threads(cfg: &SweepConfig, threads: usize) -> Result<Vec<ResultRow>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Config {
            line: 0,
            msg: format!("cannot start {threads} worker threads: {e}"),
        })?;
    pool.install(|| run_sweep(cfg))
}

/// Reads a sweep config: `key=value` lines, `#` comments.
///
/// Keys: `axis`, `values` (comma-separated), `trials`, `qubits`, `ppms`,
/// `density`, `seed`, `resources`, `strategies` (comma-separated), `passes`,
/// `ports_x`, `ports_z`, `mapper`, `pass_mode` (`chained`/`independent`),
/// `timing`.
pub fn parse_sweep_config(src: &str) -> Result<SweepConfig> {
    let mut axis = None;
    let mut values = None;
    let mut trials = 1usize;
    let mut base = RandomSpec {
        n_qubits: 20,
        n_ppms: 200,
        density: 0.3,
        seed: 0,
        attach_resources: true,
    };
    let mut strategies = Strategy::ALL.to_vec();
    let mut shared = StrategyConfig::default();
    let (mut bx, mut bz) = (2u32, 2u32);
    let mut record_runtime = false;
    for (i, raw) in src.lines().enumerate() {
        let line = i + 1;
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        let bad = |msg: String| Error::Config { line, msg };
        let (key, value) = text
            .split_once('=')
            .ok_or_else(|| bad(format!("expected `key=value`, got `{text}`")))?;
        let (key, value) = (key.trim(), value.trim());
        fn num<T: FromStr>(key: &str, value: &str) -> std::result::Result<T, String> {
            value.parse().map_err(|_| format!("bad value `{value}` for `{key}`"))
        }
        let parsed: std::result::Result<(), String> = (|| {
            match key {
                "axis" => axis = Some(value.parse()?),
                "values" => {
                    values = Some(
                        value
                            .split(',')
                            .map(|v| num::<f64>(key, v.trim()))
                            .collect::<std::result::Result<Vec<_>, _>>()?,
                    )
                }
                "trials" => trials = num(key, value)?,
                "qubits" => base.n_qubits = num(key, value)?,
                "ppms" => base.n_ppms = num(key, value)?,
                "density" => base.density = num(key, value)?,
                "seed" => base.seed = num(key, value)?,
                "resources" => base.attach_resources = num(key, value)?,
                "timing" => record_runtime = num(key, value)?,
                "passes" => shared.passes = num(key, value)?,
                "ports_x" => bx = num(key, value)?,
                "ports_z" => bz = num(key, value)?,
                "mapper" => shared.mapper = value.parse::<Mapper>().map_err(|e| e.to_string())?,
                "pass_mode" => {
                    shared.pass_mode = match value {
                        "chained" => PassMode::Chained,
                        "independent" => PassMode::Independent,
                        _ => return Err(format!("unknown pass_mode `{value}`")),
                    }
                }
                "strategies" => {
                    strategies = value
                        .split(',')
                        .map(|s| s.trim().parse::<Strategy>().map_err(|e| e.to_string()))
                        .collect::<std::result::Result<Vec<_>, _>>()?
                }
                _ => return Err(format!("unknown key `{key}`")),
            }
            Ok(())
        })();
        parsed.map_err(bad)?;
    }
    let missing = |what: &str| Error::Config {
        line: 0,
        msg: format!("missing `{what}=`"),
    };
    shared.budget = PortBudget::new(bx, bz).map_err(|e| Error::Config {
        line: 0,
        msg: e.to_string(),
    })?;
    base.validate().map_err(|e| Error::Config {
        line: 0,
        msg: e.to_string(),
    })?;
    let cfg = SweepConfig {
        axis: axis.ok_or_else(|| missing("axis"))?,
        values: values.ok_or_else(|| missing("values"))?,
        trials,
        base,
        strategies: strategies
            .into_iter()
            .map(|strategy| StrategyConfig { strategy, ..shared })
            .collect(),
        record_runtime,
    };
    cfg.validate().map_err(|msg| Error::Config { line: 0, msg })?;
    Ok(cfg)
}
