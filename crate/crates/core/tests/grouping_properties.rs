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

//! Partitioner properties, with a dynamic-programming oracle for the
//! unconstrained clique count.

use rand::Rng;

use ppmsched_core::grouping::{baseline_grouping, greedy_cliques, hw_greedy, port_demand, Grouping};
use ppmsched_core::random::{random_pauli, rng_for};
use ppmsched_core::{PauliString, PortBudget};

/// Fewest contiguous pairwise-commuting segments covering `seq`.
fn min_contiguous_cliques(seq: &[PauliString]) -> usize {
    let m = seq.len();
    let mut best = vec![usize::MAX; m + 1];
    best[0] = 0;
    for end in 1..=m {
        for start in (0..end).rev() {
            // Extending leftwards only needs the new member checked against the rest.
            let commuting = (start..end).all(|i| seq[start].commutes(&seq[i]).unwrap());
            if !commuting {
                break;
            }
            best[end] = best[end].min(best[start] + 1);
        }
    }
    best[m]
}

fn random_seq<R: Rng>(rng: &mut R) -> Vec<PauliString> {
    let n = rng.gen_range(1..=8);
    let m = rng.gen_range(0..=30);
    let d = [0.1, 0.3, 0.6][rng.gen_range(0..3)];
    (0..m).map(|_| random_pauli(n, d, rng)).collect()
}

fn assert_contiguous_in_order(g: &Grouping, len: usize) {
    assert_eq!(g.order().collect::<Vec<_>>(), (0..len).collect::<Vec<_>>());
    assert!(g.groups().iter().all(|grp| !grp.is_empty()));
}

#[test]
fn partitioners_respect_their_constraints() {
    let mut rng = rng_for(10);
    for _ in 0..400 {
        let seq = random_seq(&mut rng);
        let b = PortBudget::new(rng.gen_range(1..=3), rng.gen_range(1..=3)).unwrap();
        let cliques = greedy_cliques(&seq).unwrap();
        let hw = hw_greedy(&seq, b).unwrap();
        let base = baseline_grouping(&seq, b).unwrap();
        for g in [&cliques, &hw, &base] {
            assert_contiguous_in_order(g, seq.len());
        }
        assert!(cliques.is_valid_for(&seq, None));
        assert!(hw.is_valid_for(&seq, Some(b)));
        assert!(base.is_valid_for(&seq, Some(b)));
        for grp in hw.groups().iter().chain(base.groups()) {
            let members: Vec<PauliString> = grp.iter().map(|&i| seq[i].clone()).collect();
            assert!(port_demand(&members).unwrap().within(b));
        }
        assert!(cliques.depth() <= hw.depth());
        assert!(hw.depth() <= base.depth());
    }
}

#[test]
fn greedy_cliques_is_optimal_among_contiguous_partitions() {
    let mut rng = rng_for(11);
    for _ in 0..400 {
        let seq = random_seq(&mut rng);
        assert_eq!(greedy_cliques(&seq).unwrap().depth(), min_contiguous_cliques(&seq));
    }
}

#[test]
fn unbounded_budget_matches_cliques() {
    let mut rng = rng_for(12);
    for _ in 0..200 {
        let seq = random_seq(&mut rng);
        let cliques = greedy_cliques(&seq).unwrap();
        assert_eq!(hw_greedy(&seq, PortBudget::unbounded()).unwrap(), cliques);
        assert_eq!(baseline_grouping(&seq, PortBudget::unbounded()).unwrap(), cliques);
    }
}

#[test]
fn depth_is_monotone_in_budget() {
    let mut rng = rng_for(13);
    for _ in 0..200 {
        let seq = random_seq(&mut rng);
        let mut last = usize::MAX;
        for k in 1..=6 {
            let d = hw_greedy(&seq, PortBudget::new(k, k).unwrap()).unwrap().depth();
            assert!(d <= last);
            last = d;
        }
        let tight = hw_greedy(&seq, PortBudget::new(1, 2).unwrap()).unwrap().depth();
        let loose = hw_greedy(&seq, PortBudget::new(2, 2).unwrap()).unwrap().depth();
        assert!(loose <= tight);
    }
}

#[test]
fn disjoint_supports_share_one_layer() {
    let seq: Vec<PauliString> = ["XIII", "IYII", "IIZI", "IIIX"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    for k in 1..=3 {
        assert_eq!(hw_greedy(&seq, PortBudget::new(k, k).unwrap()).unwrap().depth(), 1);
    }
    assert_eq!(greedy_cliques(&[]).unwrap().depth(), 0);
}
