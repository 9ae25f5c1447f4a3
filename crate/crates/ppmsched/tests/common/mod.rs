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

//! Random circuit builders shared by the integration tests.

#![allow(dead_code)]

use rand::Rng;

use ppmsched_core::circuit::{GateCircuit, RotationAngle};
use ppmsched_core::clifford::CliffordGate;
use ppmsched_core::random::random_pauli;
use ppmsched_core::{PauliLetter, PauliString};

pub fn random_clifford<R: Rng>(rng: &mut R, n: usize) -> CliffordGate {
    let a = rng.gen_range(0..n);
    if n == 1 {
        return [
            CliffordGate::H(a),
            CliffordGate::S(a),
            CliffordGate::Sdg(a),
            CliffordGate::X(a),
            CliffordGate::Y(a),
            CliffordGate::Z(a),
        ][rng.gen_range(0..6)];
    }
    let mut b = rng.gen_range(0..n - 1);
    if b >= a {
        b += 1;
    }
    match rng.gen_range(0..9) {
        0 => CliffordGate::H(a),
        1 => CliffordGate::S(a),
        2 => CliffordGate::Sdg(a),
        3 => CliffordGate::X(a),
        4 => CliffordGate::Y(a),
        5 => CliffordGate::Z(a),
        6 => CliffordGate::Cx(a, b),
        7 => CliffordGate::Cz(a, b),
        _ => CliffordGate::Swap(a, b),
    }
}

/// A Clifford+T (+Rz) circuit on `n` qubits with `gates` gates, about a third
/// of them rotations, optionally followed by measurements of random qubits.
pub fn random_circuit<R: Rng>(rng: &mut R, n: usize, gates: usize, measure: bool) -> GateCircuit {
    let mut c = GateCircuit::new(n);
    for _ in 0..gates {
        if rng.gen_bool(1.0 / 3.0) {
            let angle = match rng.gen_range(0..3) {
                0 => RotationAngle::T,
                1 => RotationAngle::Tdg,
                _ => RotationAngle::Rz(rng.gen_range(-3.0..3.0)),
            };
            c.rotation(rng.gen_range(0..n), angle).unwrap();
        } else {
            c.clifford(random_clifford(rng, n)).unwrap();
        }
    }
    if measure {
        for q in 0..n {
            if rng.gen_bool(0.5) {
                c.measure(q).unwrap();
            }
        }
    }
    c
}

/// A pairwise-commuting clique of 2..=`max_size` program strings on `n`
/// qubits, each given its own `Z` resource tail.
pub fn random_clique<R: Rng>(rng: &mut R, n: usize, max_size: usize, density: f64) -> Vec<PauliString> {
    loop {
        let size = rng.gen_range(2..=max_size);
        let mut members: Vec<PauliString> = Vec::with_capacity(size);
        for _ in 0..200 * size {
            if members.len() == size {
                break;
            }
            let p = random_pauli(n, density, rng);
            if members.iter().all(|q| q.commutes(&p).unwrap()) {
                members.push(p);
            }
        }
        if members.len() < 2 {
            continue;
        }
        let width = n + members.len();
        return members
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let mut q = p.padded(width);
                q.set_letter(n + i, PauliLetter::Z);
                q
            })
            .collect();
    }
}
