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

//! Instance builders shared by the integration tests.

#![allow(dead_code)]

use rand::Rng;

use ppmsched_core::random::random_pauli;
use ppmsched_core::{PauliLetter, PauliString};

/// A pairwise-commuting set of up to `size` program strings on `n` qubits,
/// each drawn with the given density; members that would anticommute with an
/// earlier one are redrawn (giving up after a bounded number of attempts).
pub fn random_commuting_set<R: Rng>(rng: &mut R, n: usize, size: usize, density: f64) -> Vec<PauliString> {
    let mut out: Vec<PauliString> = Vec::with_capacity(size);
    let mut attempts = 0;
    while out.len() < size && attempts < 200 * size {
        attempts += 1;
        let p = random_pauli(n, density, rng);
        if out.iter().all(|q| q.commutes(&p).unwrap()) {
            out.push(p);
        }
    }
    out
}

/// Gives member `i` a `Z` on resource column `n + i`, as compiled rotations carry.
pub fn with_resource_tails(members: &[PauliString]) -> Vec<PauliString> {
    let n = members.first().map_or(0, PauliString::n_qubits);
    let width = n + members.len();
    members
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let mut q = p.padded(width);
            q.set_letter(n + i, PauliLetter::Z);
            q
        })
        .collect()
}

/// A commuting clique with resource tails, between 2 and `max_size` members.
pub fn random_clique<R: Rng>(rng: &mut R, n: usize, max_size: usize, density: f64) -> Vec<PauliString> {
    loop {
        let size = rng.gen_range(2..=max_size);
        let members = random_commuting_set(rng, n, size, density);
        if members.len() >= 2 {
            return with_resource_tails(&members);
        }
    }
}

/// Random Pauli with a uniformly random phase.
pub fn random_phased<R: Rng>(rng: &mut R, n: usize) -> PauliString {
    let letters: Vec<PauliLetter> = (0..n).map(|_| PauliLetter::ALL[rng.gen_range(0..4)]).collect();
    PauliString::from_letters(&letters).with_phase_exp(rng.gen_range(0..4))
}
