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

//! Depth-reduction heuristics on top of the greedy partitioners.
//!
//! - *Clique reshuffling* walks the sequence and swaps each commuting
//!   adjacent pair with probability 1/2, then regroups.
//! - *Generator restructuring* replaces members of a commuting clique by
//!   products of two members, which generates the same group but can move
//!   port pressure off overloaded qubits.
//!
//! [`run_strategy`] combines them and always keeps the unmodified ordering
//! as a candidate, so no strategy ends up deeper than its own starting point.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use rand::RngCore;

use crate::circuit::PpmCircuit;
use crate::error::{Error, Result};
use crate::grouping::{
    baseline_grouping, greedy_cliques, hw_greedy, split_cliques, Grouping, Metrics, PortBudget, PortDemand,
};
use crate::pauli::{PauliString, WeightScope};
use crate::random::{derive_seed, rng_for};

/// Largest clique [`brute_force_restructure`] will enumerate.
pub const BRUTE_FORCE_LIMIT: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    Baseline,
    GreedyRestructure,
    Reshuffle,
    Combined,
}

impl Strategy {
    pub const ALL: [Strategy; 4] = [
        Strategy::Baseline,
        Strategy::GreedyRestructure,
        Strategy::Reshuffle,
        Strategy::Combined,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Strategy::Baseline => "baseline",
            Strategy::GreedyRestructure => "greedy",
            Strategy::Reshuffle => "reshuffle",
            Strategy::Combined => "combined",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown {kind} {value:?}")]
pub struct ParseNameError {
    pub kind: &'static str,
    pub value: alloc::string::String,
}

impl FromStr for Strategy {
    type Err = ParseNameError;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        match s {
            "baseline" => Ok(Strategy::Baseline),
            "greedy" | "greedy-restructure" => Ok(Strategy::GreedyRestructure),
            "reshuffle" => Ok(Strategy::Reshuffle),
            "combined" => Ok(Strategy::Combined),
            _ => Err(ParseNameError {
                kind: "strategy",
                value: s.into(),
            }),
        }
    }
}

/// How a candidate ordering is turned into hardware time steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Mapper {
    /// Split each commuting clique by ports, never merging cliques.
    CliqueSplit,
    /// Regroup the whole sequence with the port-aware greedy.
    #[default]
    HwGreedy,
}

impl Mapper {
    pub fn as_str(&self) -> &'static str {
        match self {
            Mapper::CliqueSplit => "clique-split",
            Mapper::HwGreedy => "hw-greedy",
        }
    }

    fn map(&self, seq: &[PauliString], cliques: &Grouping, budget: PortBudget) -> Result<Grouping> {
        match self {
            Mapper::CliqueSplit => split_cliques(seq, cliques, budget),
            Mapper::HwGreedy => hw_greedy(seq, budget),
        }
    }
}

impl FromStr for Mapper {
    type Err = ParseNameError;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        match s {
            "clique-split" | "clique-then-split" => Ok(Mapper::CliqueSplit),
            "hw-greedy" => Ok(Mapper::HwGreedy),
            _ => Err(ParseNameError {
                kind: "mapper",
                value: s.into(),
            }),
        }
    }
}

/// Whether reshuffle pass `t` starts from pass `t-1` or from the input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum PassMode {
    #[default]
    Chained,
    Independent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StrategyConfig {
    pub strategy: Strategy,
    /// Number of reshuffled candidates on top of the input order.
    pub passes: usize,
    pub seed: u64,
    pub budget: PortBudget,
    pub mapper: Mapper,
    pub pass_mode: PassMode,
}

impl Default for StrategyConfig {
    fn default() -> Self {
        StrategyConfig {
            strategy: Strategy::Combined,
            passes: 3,
            seed: 0,
            budget: PortBudget::surface_code(),
            mapper: Mapper::HwGreedy,
            pass_mode: PassMode::Chained,
        }
    }
}

/// One left-to-right sweep of random commuting adjacent swaps.
///
/// For each position `i` in order, if the current elements at `i` and `i+1`
/// commute, one bit is drawn from `rng` and the two are swapped when it is set.
pub fn reshuffle_pass<R: RngCore + ?Sized>(seq: &[PauliString], rng: &mut R) -> Vec<PauliString> {
    let mut order: Vec<usize> = (0..seq.len()).collect();
    reshuffle_order(seq, &mut order, rng);
    order.into_iter().map(|i| seq[i].clone()).collect()
}

/// [`reshuffle_pass`] on a permutation of indices into `seq`.
pub fn reshuffle_order<R: RngCore + ?Sized>(seq: &[PauliString], order: &mut [usize], rng: &mut R) {
    for i in 0..order.len().saturating_sub(1) {
        if seq[order[i]].commutes_unchecked(&seq[order[i + 1]]) && rng.next_u32() & 1 == 1 {
            order.swap(i, i + 1);
        }
    }
}

/// Moves applied by [`restructure_clique`]: member `target` was replaced by
/// `member[target] · member[multiplier]`. No index appears twice in a plan.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RestructurePlan {
    pub moves: Vec<(usize, usize)>,
}

impl RestructurePlan {
    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Applies the plan to `clique`. Multipliers are always original members.
    pub fn apply(&self, clique: &[PauliString]) -> Result<Vec<PauliString>> {
        let mut out = clique.to_vec();
        for &(t, m) in &self.moves {
            for i in [t, m] {
                if i >= clique.len() {
                    return Err(Error::GroupingIndex {
                        index: i,
                        len: clique.len(),
                    });
                }
            }
            out[t] = clique[t].multiply(&clique[m])?;
        }
        Ok(out)
    }
}

fn check_clique(clique: &[PauliString]) -> Result<usize> {
    let n = clique.first().map_or(0, |p| p.n_qubits());
    for (i, a) in clique.iter().enumerate() {
        for (j, b) in clique.iter().enumerate().skip(i + 1) {
            if !a.commutes(b)? {
                return Err(Error::NotCommuting(i, j));
            }
        }
    }
    Ok(n)
}

#[inline]
fn over(v: u32, b: u32) -> i64 {
    v.saturating_sub(b) as i64
}

/// Change in total excess when `old` is swapped for `new` in a group with
/// demand `d`. Only columns touched by either string can change.
fn excess_delta(d: &PortDemand, old: &PauliString, new: &PauliString, b: PortBudget) -> i64 {
    let mut delta = 0;
    let words = old.x_words().len();
    for w in 0..words {
        let (ox, oz) = (old.x_words()[w], old.z_words()[w]);
        let (nx, nz) = (new.x_words()[w], new.z_words()[w]);
        let mut touched = (ox ^ nx) | (oz ^ nz);
        while touched != 0 {
            let bit = touched.trailing_zeros() as usize;
            touched &= touched - 1;
            let q = w * 64 + bit;
            let dx = d.dx(q);
            let dz = d.dz(q);
            let dx_new = dx - (ox >> bit & 1) as u32 + (nx >> bit & 1) as u32;
            let dz_new = dz - (oz >> bit & 1) as u32 + (nz >> bit & 1) as u32;
            delta += over(dx_new, b.bx()) - over(dx, b.bx()) + over(dz_new, b.bz()) - over(dz, b.bz());
        }
    }
    delta
}

/// Greedy generator restructuring of one commuting clique.
///
/// Repeatedly takes the move `member[i] ← member[i] · member[j]`, with both
/// `i` and `j` untouched so far, that lowers the port excess the most; ties go
/// to the larger weight reduction, then to the smallest `(i, j)`. Stops when
/// no move strictly lowers the excess. Excess may remain.
pub fn restructure_clique(clique: &[PauliString], budget: PortBudget) -> Result<(Vec<PauliString>, RestructurePlan)> {
    let n = check_clique(clique)?;
    let mut demand = PortDemand::new(n);
    for p in clique {
        demand.add_unchecked(p);
    }
    let mut out = clique.to_vec();
    let mut plan = RestructurePlan::default();
    if demand.within(budget) {
        return Ok((out, plan));
    }
    let mut used = vec![false; clique.len()];
    loop {
        // (excess delta, weight delta, i, j, product)
        let mut best: Option<(i64, i64, usize, usize, PauliString)> = None;
        for i in 0..clique.len() {
            if used[i] {
                continue;
            }
            for j in 0..clique.len() {
                if i == j || used[j] {
                    continue;
                }
                let mut product = clique[i].clone();
                product.mul_assign_unchecked(&clique[j]);
                let de = excess_delta(&demand, &clique[i], &product, budget);
                if de >= 0 {
                    continue;
                }
                let dw = product.weight() as i64 - clique[i].weight() as i64;
                if best.as_ref().is_none_or(|b| (de, dw) < (b.0, b.1)) {
                    best = Some((de, dw, i, j, product));
                }
            }
        }
        let Some((_, _, i, j, product)) = best else {
            break;
        };
        demand.remove_unchecked(&clique[i]);
        demand.add_unchecked(&product);
        out[i] = product;
        used[i] = true;
        used[j] = true;
        plan.moves.push((i, j));
    }
    Ok((out, plan))
}

/// Depth of the port-aware greedy over `seq` visited in `order`, reusing
/// `demand` as scratch space (left zeroed on return).
fn hw_depth_in_order(seq: &[PauliString], order: &[usize], budget: PortBudget, demand: &mut PortDemand) -> usize {
    let mut depth = 0;
    let mut start = 0;
    for (pos, &i) in order.iter().enumerate() {
        let p = &seq[i];
        let commutes = order[start..pos].iter().all(|&m| seq[m].commutes_unchecked(p));
        if pos == start || !commutes || !demand.fits(p, budget) {
            for &m in &order[start..pos] {
                demand.remove_unchecked(&seq[m]);
            }
            start = pos;
            depth += 1;
        }
        demand.add_unchecked(p);
    }
    for &m in &order[start..] {
        demand.remove_unchecked(&seq[m]);
    }
    depth
}

fn for_each_permutation(order: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k <= 1 {
        f(order);
        return;
    }
    // Heap's algorithm.
    for i in 0..k - 1 {
        for_each_permutation(order, k - 1, f);
        if k.is_multiple_of(2) {
            order.swap(i, k - 1);
        } else {
            order.swap(0, k - 1);
        }
    }
    for_each_permutation(order, k - 1, f);
}

/// All restructure plans on `size` members where each member takes part in
/// at most one move, in either role.
pub fn all_plans(size: usize) -> Vec<RestructurePlan> {
    fn rec(free: &mut Vec<bool>, from: usize, moves: &mut Vec<(usize, usize)>, out: &mut Vec<RestructurePlan>) {
        let Some(a) = (from..free.len()).find(|&i| free[i]) else {
            out.push(RestructurePlan { moves: moves.clone() });
            return;
        };
        free[a] = false;
        rec(free, a + 1, moves, out);
        for b in a + 1..free.len() {
            if !free[b] {
                continue;
            }
            free[b] = false;
            for mv in [(a, b), (b, a)] {
                moves.push(mv);
                rec(free, a + 1, moves, out);
                moves.pop();
            }
            free[b] = true;
        }
        free[a] = true;
    }
    let mut out = Vec::new();
    rec(&mut vec![true; size], 0, &mut Vec::new(), &mut out);
    out
}

/// Exhaustive minimum of the port-aware greedy depth over every restructure
/// plan and every member ordering. Only for cliques of at most
/// [`BRUTE_FORCE_LIMIT`] members.
pub fn brute_force_restructure(clique: &[PauliString], budget: PortBudget) -> Result<usize> {
    if clique.len() > BRUTE_FORCE_LIMIT {
        return Err(Error::CliqueTooLarge {
            size: clique.len(),
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let n = check_clique(clique)?;
    if clique.is_empty() {
        return Ok(0);
    }
    let mut demand = PortDemand::new(n);
    let mut best = usize::MAX;
    for plan in all_plans(clique.len()) {
        let members = plan.apply(clique)?;
        let mut order: Vec<usize> = (0..members.len()).collect();
        let k = order.len();
        for_each_permutation(&mut order, k, &mut |o| {
            best = best.min(hw_depth_in_order(&members, o, budget, &mut demand));
        });
        if best == 1 {
            break;
        }
    }
    Ok(best)
}

/// Depths reached on a single clique by the greedy restructure pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CliqueDepths {
    /// Port-aware greedy on the clique as given.
    pub original: usize,
    /// Port-aware greedy on the restructured clique.
    pub restructured: usize,
}

impl CliqueDepths {
    /// What the pipeline keeps: the better of the two.
    pub fn kept(&self) -> usize {
        self.original.min(self.restructured)
    }
}

pub fn clique_depths(clique: &[PauliString], budget: PortBudget) -> Result<CliqueDepths> {
    let (new, _) = restructure_clique(clique, budget)?;
    Ok(CliqueDepths {
        original: hw_greedy(clique, budget)?.depth(),
        restructured: hw_greedy(&new, budget)?.depth(),
    })
}

/// Result of [`run_strategy`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrategyOutcome {
    pub grouping: Grouping,
    /// The scheduled sequence; `grouping` indexes into it.
    pub sequence: Vec<PauliString>,
    pub metrics: Metrics,
    /// 0 for the input order, `t` for the `t`-th reshuffled ordering.
    pub candidate: usize,
    pub restructured: bool,
}

struct Evaluated {
    grouping: Grouping,
    sequence: Vec<PauliString>,
    restructured: bool,
}

impl Evaluated {
    fn key(&self, n_program: usize) -> (usize, usize) {
        let w = self
            .sequence
            .iter()
            .map(|p| p.weight_in(WeightScope::Program(n_program)))
            .sum();
        (self.grouping.depth(), w)
    }
}

fn evaluate_plain(seq: Vec<PauliString>, cfg: &StrategyConfig) -> Result<Evaluated> {
    let cliques = greedy_cliques(&seq)?;
    let grouping = cfg.mapper.map(&seq, &cliques, cfg.budget)?;
    Ok(Evaluated {
        grouping,
        sequence: seq,
        restructured: false,
    })
}

/// Restructures every clique of `seq` (keeping a clique's rewrite only when
/// it maps better on its own), maps the result, and falls back to the
/// unrestructured mapping if that is no deeper.
fn evaluate_restructured(seq: Vec<PauliString>, cfg: &StrategyConfig, n_program: usize) -> Result<Evaluated> {
    let cliques = greedy_cliques(&seq)?;
    let scope = WeightScope::Program(n_program);
    let weight = |ps: &[PauliString]| ps.iter().map(|p| p.weight_in(scope)).sum::<usize>();
    let mut rewritten = seq.clone();
    let mut changed = false;
    for clique in cliques.groups() {
        let members: Vec<PauliString> = clique.iter().map(|&i| seq[i].clone()).collect();
        let (new, plan) = restructure_clique(&members, cfg.budget)?;
        if plan.is_empty() {
            continue;
        }
        let old_key = (hw_greedy(&members, cfg.budget)?.depth(), weight(&members));
        let new_key = (hw_greedy(&new, cfg.budget)?.depth(), weight(&new));
        if new_key < old_key {
            for (&i, p) in clique.iter().zip(new) {
                rewritten[i] = p;
            }
            changed = true;
        }
    }
    let plain = Evaluated {
        grouping: cfg.mapper.map(&seq, &cliques, cfg.budget)?,
        sequence: seq,
        restructured: false,
    };
    if !changed {
        return Ok(plain);
    }
    let candidate = Evaluated {
        grouping: cfg.mapper.map(&rewritten, &cliques, cfg.budget)?,
        sequence: rewritten,
        restructured: true,
    };
    Ok(if candidate.key(n_program) < plain.key(n_program) {
        candidate
    } else {
        plain
    })
}

/// Candidate orderings: the input order first, then `passes` reshuffles.
fn candidate_orders(seq: &[PauliString], cfg: &StrategyConfig) -> Vec<Vec<usize>> {
    let identity: Vec<usize> = (0..seq.len()).collect();
    let mut orders = vec![identity.clone()];
    for t in 1..=cfg.passes {
        let mut order = match cfg.pass_mode {
            PassMode::Chained => orders[t - 1].clone(),
            PassMode::Independent => identity.clone(),
        };
        let mut rng = rng_for(derive_seed(cfg.seed, &[t as u64]));
        reshuffle_order(seq, &mut order, &mut rng);
        orders.push(order);
    }
    orders
}

pub fn run_strategy(circuit: &PpmCircuit, cfg: &StrategyConfig) -> Result<StrategyOutcome> {
    run_strategy_on(&circuit.paulis(), circuit.n_program_qubits(), cfg)
}

/// [`run_strategy`] on a bare sequence whose first `n_program` columns are
/// program qubits.
pub fn run_strategy_on(seq: &[PauliString], n_program: usize, cfg: &StrategyConfig) -> Result<StrategyOutcome> {
    let finish = |e: Evaluated, candidate: usize| -> Result<StrategyOutcome> {
        let metrics = Metrics::compute(&e.sequence, n_program, &e.grouping)?;
        Ok(StrategyOutcome {
            grouping: e.grouping,
            sequence: e.sequence,
            metrics,
            candidate,
            restructured: e.restructured,
        })
    };
    match cfg.strategy {
        Strategy::Baseline => {
            let grouping = baseline_grouping(seq, cfg.budget)?;
            finish(
                Evaluated {
                    grouping,
                    sequence: seq.to_vec(),
                    restructured: false,
                },
                0,
            )
        }
        Strategy::GreedyRestructure => finish(evaluate_restructured(seq.to_vec(), cfg, n_program)?, 0),
        Strategy::Reshuffle | Strategy::Combined => {
            let mut best: Option<(Evaluated, usize)> = None;
            for (t, order) in candidate_orders(seq, cfg).into_iter().enumerate() {
                let ordered: Vec<PauliString> = order.iter().map(|&i| seq[i].clone()).collect();
                let e = if cfg.strategy == Strategy::Combined {
                    evaluate_restructured(ordered, cfg, n_program)?
                } else {
                    evaluate_plain(ordered, cfg)?
                };
                if best
                    .as_ref()
                    .is_none_or(|(b, _)| e.grouping.depth() < b.grouping.depth())
                {
                    best = Some((e, t));
                }
            }
            let (e, t) = best.expect("at least the input order is evaluated");
            finish(e, t)
        }
    }
}
