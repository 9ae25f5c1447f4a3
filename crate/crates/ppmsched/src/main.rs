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

//! `ppmsched` command-line interface.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};

use ppmsched::ppm_text::{emit_ppm_text, parse_ppm_text, render_pauli};
use ppmsched::qasm::parse_qasm_subset;
use ppmsched::results::{emit_results, make_row, InstanceInfo, OutputFormat};
use ppmsched::sim;
use ppmsched::sweep::{parse_sweep_config, run_sweep, run_sweep_with_threads};
use ppmsched_core::circuit::PpmCircuit;
use ppmsched_core::optimize::{run_strategy, Mapper, PassMode, Strategy, StrategyConfig};
use ppmsched_core::pauli::WeightScope;
use ppmsched_core::pbc::compile_to_pprs;
use ppmsched_core::random::{gen_random_ppms, RandomSpec};
use ppmsched_core::PortBudget;

/// Largest circuit `verify` will expand into dense matrices.
const VERIFY_MAX_QUBITS: usize = 5;
const VERIFY_TOL: f64 = 1e-9;

#[derive(Parser)]
#[command(
    name = "ppmsched",
    version,
    about = "Schedule Pauli product measurements under port budgets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compile a QASM-subset circuit into a PPM file.
    Compile {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Schedule a PPM file with one strategy and write a result row.
    Optimize {
        input: PathBuf,
        #[arg(long, default_value = "combined")]
        strategy: Strategy,
        #[arg(long, default_value_t = 3)]
        passes: usize,
        #[arg(long, default_value_t = 2)]
        ports_x: u32,
        #[arg(long, default_value_t = 2)]
        ports_z: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "hw-greedy")]
        mapper: Mapper,
        /// Start every reshuffle pass from the input order instead of the previous pass.
        #[arg(long)]
        independent_passes: bool,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value = "csv")]
        format: OutputFormat,
        /// Also write the scheduled layers as a PPM file, one `# layer` comment per group.
        #[arg(long)]
        schedule: Option<PathBuf>,
    },
    /// Generate a random PPM file.
    Random {
        #[arg(long)]
        qubits: usize,
        #[arg(long)]
        ppms: usize,
        #[arg(long)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Omit the per-measurement resource columns.
        #[arg(long)]
        no_resources: bool,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Run a parameter sweep described by a config file.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value = "csv")]
        format: OutputFormat,
        /// Worker threads (default: all cores). Output does not depend on it.
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Check a compiled circuit against its dense unitary (at most 5 qubits).
    Verify { input: PathBuf },
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn write(path: &Path, bytes: &[u8]) -> anyhow::Result<()> {
    fs::write(path, bytes).with_context(|| format!("cannot write {}", path.display()))
}

fn load_ppm(path: &Path) -> anyhow::Result<PpmCircuit> {
    parse_ppm_text(&read(path)?).with_context(|| format!("in {}", path.display()))
}

fn compile(input: &Path, output: &Path) -> anyhow::Result<()> {
    let circuit = parse_qasm_subset(&read(input)?).with_context(|| format!("in {}", input.display()))?;
    let ppms = compile_to_pprs(&circuit)?.to_ppm_circuit()?;
    write(output, emit_ppm_text(&ppms).as_bytes())
}

fn verify(input: &Path) -> anyhow::Result<()> {
    let circuit = parse_qasm_subset(&read(input)?).with_context(|| format!("in {}", input.display()))?;
    if circuit.n_qubits() > VERIFY_MAX_QUBITS {
        bail!(
            "verify supports at most {VERIFY_MAX_QUBITS} qubits, circuit has {}",
            circuit.n_qubits()
        );
    }
    let program = compile_to_pprs(&circuit)?;
    if !sim::verify_compilation(&circuit, &program, VERIFY_TOL)? {
        bail!("compiled program disagrees with the circuit's dense unitary");
    }
    println!(
        "ok: {} qubits, {} rotations, {} measurements",
        circuit.n_qubits(),
        program.pprs.len(),
        program.terminal_measurements.len()
    );
    Ok(())
}

/// Mean fraction of non-identity program letters, for the result row.
fn observed_density(c: &PpmCircuit) -> f64 {
    let cells = c.n_program_qubits() * c.len();
    if cells == 0 {
        return 0.0;
    }
    let scope = WeightScope::Program(c.n_program_qubits());
    let w: usize = c.paulis().iter().map(|p| p.weight_in(scope)).sum();
    w as f64 / cells as f64
}

fn schedule_text(outcome: &ppmsched_core::optimize::StrategyOutcome, n_program: usize) -> String {
    let mut s = String::new();
    for (k, group) in outcome.grouping.groups().iter().enumerate() {
        s.push_str(&format!("# layer {k}\n"));
        for &i in group {
            s.push_str(&render_pauli(&outcome.sequence[i], n_program));
            s.push('\n');
        }
    }
    s
}

fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::Compile { input, output } => compile(&input, &output),
        Command::Verify { input } => verify(&input),
        Command::Random {
            qubits,
            ppms,
            density,
            seed,
            no_resources,
            output,
        } => {
            let spec = RandomSpec {
                n_qubits: qubits,
                n_ppms: ppms,
                density,
                seed,
                attach_resources: !no_resources,
            };
            let c = gen_random_ppms(&spec)?;
            write(&output, emit_ppm_text(&c).as_bytes())
        }
        Command::Optimize {
            input,
            strategy,
            passes,
            ports_x,
            ports_z,
            seed,
            mapper,
            independent_passes,
            out,
            format,
            schedule,
        } => {
            let circuit = load_ppm(&input)?;
            let cfg = StrategyConfig {
                strategy,
                passes,
                seed,
                budget: PortBudget::new(ports_x, ports_z)?,
                mapper,
                pass_mode: if independent_passes {
                    PassMode::Independent
                } else {
                    PassMode::Chained
                },
            };
            let baseline = run_strategy(
                &circuit,
                &StrategyConfig {
                    strategy: Strategy::Baseline,
                    ..cfg
                },
            )?;
            let outcome = run_strategy(&circuit, &cfg)?;
            let info = InstanceInfo {
                seed,
                n_qubits: circuit.n_program_qubits(),
                density: observed_density(&circuit),
                n_ppms: circuit.len(),
            };
            let row = make_row(&info, &cfg, &outcome, &baseline, 0.0);
            let mut buf = Vec::new();
            emit_results(&[row], format, &mut buf)?;
            write(&out, &buf)?;
            if let Some(path) = schedule {
                write(&path, schedule_text(&outcome, circuit.n_program_qubits()).as_bytes())?;
            }
            println!(
                "{}: depth {} (baseline {})",
                cfg.strategy, outcome.metrics.depth, baseline.metrics.depth
            );
            Ok(())
        }
        Command::Sweep {
            config,
            out,
            format,
            threads,
        } => {
            let cfg = parse_sweep_config(&read(&config)?).with_context(|| format!("in {}", config.display()))?;
            let rows = match threads {
                Some(n) => run_sweep_with_threads(&cfg, n)?,
                None => run_sweep(&cfg)?,
            };
            let mut buf = Vec::new();
            emit_results(&rows, format, &mut buf)?;
            write(&out, &buf)?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let mut stderr = std::io::stderr().lock();
            let _ = writeln!(stderr, "error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
