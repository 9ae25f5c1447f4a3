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

//! Port accounting and greedy partitioning of a measurement sequence into
//! parallel time steps.
//!
//! Every logical qubit exposes a limited number of X-type and Z-type ports.
//! A group of commuting measurements fits in one time step only if, on every
//! column `j`, the number of members with `X` or `Y` at `j` is at most `bx`
//! and the number with `Z` or `Y` at `j` is at most `bz`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::pauli::{PauliString, WeightScope};

/// Per-qubit limits on simultaneous X-type and Z-type port use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PortBudget {
    bx: u32,
    bz: u32,
}

impl PortBudget {
    pub fn new(bx: u32, bz: u32) -> Result<Self> {
        if bx == 0 || bz == 0 {
            return Err(Error::InvalidBudget { bx, bz });
        }
        Ok(PortBudget { bx, bz })
    }

    /// Two X and two Z ports, as on a surface-code patch.
    pub const fn surface_code() -> Self {
        PortBudget { bx: 2, bz: 2 }
    }

    pub const fn unbounded() -> Self {
        PortBudget {
            bx: u32::MAX,
            bz: u32::MAX,
        }
    }

    pub fn bx(&self) -> u32 {
        self.bx
    }

    pub fn bz(&self) -> u32 {
        self.bz
    }
}

impl Default for PortBudget {
    fn default() -> Self {
        Self::surface_code()
    }
}

/// Per-column X-type and Z-type port counts over a set of strings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PortDemand {
    dx: Vec<u32>,
    dz: Vec<u32>,
}

#[inline]
fn for_each_bit(words: &[u64], mut f: impl FnMut(usize)) {
    for (w, &word) in words.iter().enumerate() {
        let mut bits = word;
        while bits != 0 {
            f(w * 64 + bits.trailing_zeros() as usize);
            bits &= bits - 1;
        }
    }
}

impl PortDemand {
    pub fn new(n_qubits: usize) -> Self {
        PortDemand {
            dx: vec![0; n_qubits],
            dz: vec![0; n_qubits],
        }
    }

    pub fn n_qubits(&self) -> usize {
        self.dx.len()
    }

    pub fn dx(&self, q: usize) -> u32 {
        self.dx[q]
    }

    pub fn dz(&self, q: usize) -> u32 {
        self.dz[q]
    }

    fn check(&self, p: &PauliString) -> Result<()> {
        if p.n_qubits() != self.dx.len() {
            return Err(Error::DimensionMismatch {
                left: self.dx.len(),
                right: p.n_qubits(),
            });
        }
        Ok(())
    }

    pub fn add(&mut self, p: &PauliString) -> Result<()> {
        self.check(p)?;
        self.add_unchecked(p);
        Ok(())
    }

    pub(crate) fn add_unchecked(&mut self, p: &PauliString) {
        for_each_bit(p.x_words(), |j| self.dx[j] += 1);
        for_each_bit(p.z_words(), |j| self.dz[j] += 1);
    }

    pub(crate) fn remove_unchecked(&mut self, p: &PauliString) {
        for_each_bit(p.x_words(), |j| self.dx[j] -= 1);
        for_each_bit(p.z_words(), |j| self.dz[j] -= 1);
    }

    /// Whether adding `candidate` keeps every column within `budget`.
    pub fn fits(&self, candidate: &PauliString, budget: PortBudget) -> bool {
        let mut ok = true;
        for_each_bit(candidate.x_words(), |j| ok &= self.dx[j] < budget.bx);
        for_each_bit(candidate.z_words(), |j| ok &= self.dz[j] < budget.bz);
        ok
    }

    pub fn within(&self, budget: PortBudget) -> bool {
        self.excess(budget) == 0
    }

    /// Total overflow `Σ_q max(0, dx−bx) + max(0, dz−bz)`.
    pub fn excess(&self, budget: PortBudget) -> u64 {
        let over = |d: &[u32], b: u32| d.iter().map(|&v| v.saturating_sub(b) as u64).sum::<u64>();
        over(&self.dx, budget.bx) + over(&self.dz, budget.bz)
    }
}

/// Port demand of a group of equally sized strings.
pub fn port_demand(group: &[PauliString]) -> Result<PortDemand> {
    let mut d = PortDemand::new(group.first().map_or(0, |p| p.n_qubits()));
    for p in group {
        d.add(p)?;
    }
    Ok(d)
}

/// Whether `candidate` can join `group` without breaking `budget`.
/// Commutation is not checked here.
pub fn fits_budget(group: &[PauliString], candidate: &PauliString, budget: PortBudget) -> Result<bool> {
    let mut d = PortDemand::new(candidate.n_qubits());
    for p in group {
        d.add(p)?;
    }
    Ok(d.fits(candidate, budget))
}

/// Ordered partition of a sequence into time steps, as indices into it.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Grouping {
    groups: Vec<Vec<usize>>,
}

impl Grouping {
    pub fn new(groups: Vec<Vec<usize>>) -> Self {
        Grouping { groups }
    }

    pub fn depth(&self) -> usize {
        self.groups.len()
    }

    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    pub fn into_groups(self) -> Vec<Vec<usize>> {
        self.groups
    }

    /// Group members in schedule order.
    pub fn order(&self) -> impl Iterator<Item = usize> + '_ {
        self.groups.iter().flatten().copied()
    }

    /// Checks that this is an order-preserving partition of `seq` whose
    /// groups commute pairwise and, if `budget` is given, fit it.
    pub fn is_valid_for(&self, seq: &[PauliString], budget: Option<PortBudget>) -> bool {
        if !self.order().eq(0..seq.len()) || self.groups.iter().any(|g| g.is_empty()) {
            return false;
        }
        self.groups.iter().all(|g| {
            let members: Vec<PauliString> = g.iter().map(|&i| seq[i].clone()).collect();
            let commuting = members
                .iter()
                .enumerate()
                .all(|(i, a)| members[i + 1..].iter().all(|b| a.commutes_unchecked(b)));
            let fits = match (budget, port_demand(&members)) {
                (None, _) => true,
                (Some(b), Ok(d)) => d.within(b),
                (Some(_), Err(_)) => false,
            };
            commuting && fits
        })
    }
}

fn check_uniform(seq: &[PauliString]) -> Result<usize> {
    let n = seq.first().map_or(0, |p| p.n_qubits());
    if let Some(p) = seq.iter().find(|p| p.n_qubits() != n) {
        return Err(Error::DimensionMismatch {
            left: n,
            right: p.n_qubits(),
        });
    }
    Ok(n)
}

/// Left-to-right greedy: close the working group as soon as the next string
/// anticommutes with a member or (with a budget) would overflow a port.
fn greedy_partition(seq: &[PauliString], budget: Option<PortBudget>) -> Result<Grouping> {
    let n = check_uniform(seq)?;
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    let mut demand = PortDemand::new(if budget.is_some() { n } else { 0 });
    for (i, p) in seq.iter().enumerate() {
        let commutes = current.iter().all(|&m| seq[m].commutes_unchecked(p));
        let fits = budget.is_none_or(|b| demand.fits(p, b));
        if !(commutes && fits) {
            if budget.is_some() {
                for &m in &current {
                    demand.remove_unchecked(&seq[m]);
                }
            }
            groups.push(core::mem::take(&mut current));
        }
        if budget.is_some() {
            demand.add_unchecked(p);
        }
        current.push(i);
    }
    if !current.is_empty() {
        groups.push(current);
    }
    Ok(Grouping { groups })
}

/// Maximal commuting runs, left to right. Optimal for a fixed order.
pub fn greedy_cliques(seq: &[PauliString]) -> Result<Grouping> {
    greedy_partition(seq, None)
}

/// Greedy grouping that also closes a group when a port would overflow.
pub fn hw_greedy(seq: &[PauliString], budget: PortBudget) -> Result<Grouping> {
    greedy_partition(seq, Some(budget))
}

/// Splits each given clique, in order, wherever the next member would
/// overflow a port. Cliques are never merged.
pub fn split_cliques(seq: &[PauliString], cliques: &Grouping, budget: PortBudget) -> Result<Grouping> {
    let n = check_uniform(seq)?;
    let mut demand = PortDemand::new(n);
    let mut groups = Vec::new();
    for clique in cliques.groups() {
        let mut current: Vec<usize> = Vec::new();
        for &i in clique {
            let p = seq.get(i).ok_or(Error::GroupingIndex {
                index: i,
                len: seq.len(),
            })?;
            if !demand.fits(p, budget) {
                for &m in &current {
                    demand.remove_unchecked(&seq[m]);
                }
                groups.push(core::mem::take(&mut current));
            }
            demand.add_unchecked(p);
            current.push(i);
        }
        for &m in &current {
            demand.remove_unchecked(&seq[m]);
        }
        if !current.is_empty() {
            groups.push(current);
        }
    }
    Ok(Grouping { groups })
}

/// Commuting cliques first, then each clique broken up by ports, with no
/// reordering.
pub fn baseline_grouping(seq: &[PauliString], budget: PortBudget) -> Result<Grouping> {
    split_cliques(seq, &greedy_cliques(seq)?, budget)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Metrics {
    pub depth: usize,
    pub total_weight_program: usize,
    pub total_weight_all: usize,
}

impl Metrics {
    /// Depth of `grouping` and summed weights of `seq`, where the first
    /// `n_program_qubits` columns are program qubits.
    pub fn compute(seq: &[PauliString], n_program_qubits: usize, grouping: &Grouping) -> Result<Self> {
        if let Some(index) = grouping.order().find(|&i| i >= seq.len()) {
            return Err(Error::GroupingIndex { index, len: seq.len() });
        }
        Ok(Metrics {
            depth: grouping.depth(),
            total_weight_program: seq
                .iter()
                .map(|p| p.weight_in(WeightScope::Program(n_program_qubits)))
                .sum(),
            total_weight_all: seq.iter().map(|p| p.weight()).sum(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(list: &[&str]) -> Vec<PauliString> {
        list.iter().map(|s| s.parse().unwrap()).collect()
    }

    const B2: PortBudget = PortBudget::surface_code();

    #[test]
    fn budget_must_be_positive() {
        assert_eq!(PortBudget::new(0, 2), Err(Error::InvalidBudget { bx: 0, bz: 2 }));
        assert_eq!(PortBudget::default(), PortBudget::new(2, 2).unwrap());
    }

    #[test]
    fn demand_examples() {
        let d = port_demand(&ps(&["X", "X"])).unwrap();
        assert_eq!((d.dx(0), d.dz(0)), (2, 0));
        let d = port_demand(&ps(&["Y"])).unwrap();
        assert_eq!((d.dx(0), d.dz(0)), (1, 1));
        // Three X supports and one Z support on the second qubit.
        let d = port_demand(&ps(&["XXII", "IXXI", "IXIX", "ZZZZ"])).unwrap();
        assert_eq!((d.dx(1), d.dz(1)), (3, 1));
        assert_eq!(d.excess(B2), 1);
        assert!(port_demand(&ps(&["X", "XX"])).is_err());
    }

    #[test]
    fn fits_examples() {
        let x = ps(&["X"]);
        assert!(fits_budget(&[], &x[0], B2).unwrap());
        let full = ps(&["XI", "XZ"]);
        assert!(!fits_budget(&full, &ps(&["XI"])[0], B2).unwrap());
        assert!(fits_budget(&full, &ps(&["ZI"])[0], B2).unwrap());
        assert!(!fits_budget(&full, &ps(&["YI"])[0], B2).unwrap());
    }

    #[test]
    fn cliques() {
        assert_eq!(greedy_cliques(&ps(&["XI", "IX", "XX"])).unwrap().depth(), 1);
        assert_eq!(greedy_cliques(&ps(&["X", "Z", "X", "Z"])).unwrap().depth(), 4);
        assert_eq!(greedy_cliques(&[]).unwrap().depth(), 0);
    }

    #[test]
    fn hardware_greedy_on_four_commuting_products() {
        let seq = ps(&["XXII", "IXXI", "IXIX", "ZZZZ"]);
        let g = hw_greedy(&seq, B2).unwrap();
        assert_eq!(g.groups(), [vec![0, 1], vec![2, 3]]);
        assert!(g.is_valid_for(&seq, Some(B2)));
        assert_eq!(hw_greedy(&seq, PortBudget::new(3, 3).unwrap()).unwrap().depth(), 1);
        assert_eq!(baseline_grouping(&seq, B2).unwrap().depth(), 2);
    }

    #[test]
    fn disjoint_supports_fit_any_budget() {
        let seq = ps(&["XIII", "IYII", "IIZI", "IIIX"]);
        let b1 = PortBudget::new(1, 1).unwrap();
        assert_eq!(hw_greedy(&seq, b1).unwrap().depth(), 1);
        assert_eq!(baseline_grouping(&seq, b1).unwrap().depth(), 1);
    }

    #[test]
    fn baseline_cannot_reopen_a_clique() {
        // P3 anticommutes with P1, commutes with P2, and {P1, P2} overflow (1, 1).
        let seq = ps(&["XI", "XX", "ZZ"]);
        let b1 = PortBudget::new(1, 1).unwrap();
        assert!(!seq[2].commutes(&seq[0]).unwrap());
        assert!(seq[2].commutes(&seq[1]).unwrap());
        let base = baseline_grouping(&seq, b1).unwrap();
        let hw = hw_greedy(&seq, b1).unwrap();
        assert_eq!(base.groups(), [vec![0], vec![1], vec![2]]);
        assert_eq!(hw.groups(), [vec![0], vec![1, 2]]);
    }

    #[test]
    fn metrics_sum_weights() {
        let seq = ps(&["XYZ"]);
        let g = hw_greedy(&seq, B2).unwrap();
        let m = Metrics::compute(&seq, 3, &g).unwrap();
        assert_eq!(
            m,
            Metrics {
                depth: 1,
                total_weight_program: 3,
                total_weight_all: 3
            }
        );
        let tail = ps(&["XIZ", "IXZ"]);
        let m = Metrics::compute(&tail, 2, &Grouping::new(vec![vec![0, 1]])).unwrap();
        assert_eq!((m.total_weight_program, m.total_weight_all), (2, 4));
        assert!(Metrics::compute(&seq, 3, &Grouping::new(vec![vec![0, 1]])).is_err());
    }
}
