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

//! Seeded random PPM instances and seed derivation.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::circuit::{Ppm, PpmCircuit};
use crate::error::{Error, Result};
use crate::pauli::{PauliLetter, PauliString};

const LETTERS: [PauliLetter; 3] = [PauliLetter::X, PauliLetter::Y, PauliLetter::Z];

#[inline]
fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Hashes a master seed and a list of coordinates into an independent seed.
pub fn derive_seed(master: u64, coords: &[u64]) -> u64 {
    coords
        .iter()
        .fold(splitmix64(master), |acc, &c| splitmix64(acc ^ splitmix64(c)))
}

/// Deterministic generator for a derived seed.
pub fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomSpec {
    pub n_qubits: usize,
    /// Length of the sequence.
    pub n_ppms: usize,
    /// Probability that a string acts non-trivially on a given qubit.
    pub density: f64,
    pub seed: u64,
    /// Give every string its own `Z` resource tail.
    pub attach_resources: bool,
}

impl RandomSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.density > 0.0 && self.density <= 1.0) {
            return Err(Error::InvalidSpec("density must lie in (0, 1]"));
        }
        if self.n_ppms == 0 {
            return Err(Error::InvalidSpec("n_ppms must be at least 1"));
        }
        if self.n_qubits == 0 {
            return Err(Error::InvalidSpec("n_qubits must be at least 1"));
        }
        Ok(())
    }
}

/// Draws one non-identity string: each qubit is hit with probability
/// `density` and gets X, Y or Z uniformly; all-identity draws are redrawn.
pub fn random_pauli<R: Rng + ?Sized>(n_qubits: usize, density: f64, rng: &mut R) -> PauliString {
    loop {
        let mut p = PauliString::identity(n_qubits);
        for j in 0..n_qubits {
            if rng.gen_bool(density) {
                p.set_letter(j, LETTERS[rng.gen_range(0..3)]);
            }
        }
        if !p.is_identity() {
            return p;
        }
    }
}

pub fn gen_random_ppms(spec: &RandomSpec) -> Result<PpmCircuit> {
    spec.validate()?;
    let mut rng = rng_for(spec.seed);
    let n_res = if spec.attach_resources { spec.n_ppms } else { 0 };
    let width = spec.n_qubits + n_res;
    let ppms: Vec<Ppm> = (0..spec.n_ppms)
        .map(|i| {
            let mut pauli = random_pauli(spec.n_qubits, spec.density, &mut rng).padded(width);
            let resource = spec.attach_resources.then(|| {
                pauli.set_letter(spec.n_qubits + i, PauliLetter::Z);
                i
            });
            Ppm { pauli, resource }
        })
        .collect();
    PpmCircuit::new(spec.n_qubits, n_res, ppms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::WeightScope;

    fn spec(density: f64, seed: u64) -> RandomSpec {
        RandomSpec {
            n_qubits: 8,
            n_ppms: 40,
            density,
            seed,
            attach_resources: true,
        }
    }

    #[test]
    fn full_density_gives_full_weight() {
        let c = gen_random_ppms(&spec(1.0, 3)).unwrap();
        assert!(c.ppms().iter().all(|m| m.pauli.weight_in(WeightScope::Program(8)) == 8));
    }

    #[test]
    fn deterministic_per_seed() {
        assert_eq!(
            gen_random_ppms(&spec(0.3, 9)).unwrap(),
            gen_random_ppms(&spec(0.3, 9)).unwrap()
        );
        assert_ne!(
            gen_random_ppms(&spec(0.3, 9)).unwrap(),
            gen_random_ppms(&spec(0.3, 10)).unwrap()
        );
    }

    #[test]
    fn resource_tails() {
        let c = gen_random_ppms(&spec(0.2, 1)).unwrap();
        assert_eq!(c.n_resource_qubits(), 40);
        for (i, m) in c.ppms().iter().enumerate() {
            assert_eq!(m.resource, Some(i));
            assert_eq!(m.pauli.letter(8 + i), PauliLetter::Z);
        }
        let bare = gen_random_ppms(&RandomSpec {
            attach_resources: false,
            ..spec(0.2, 1)
        })
        .unwrap();
        assert_eq!(bare.width(), 8);
    }

    #[test]
    fn invalid_specs() {
        assert!(gen_random_ppms(&spec(0.0, 1)).is_err());
        assert!(gen_random_ppms(&spec(1.5, 1)).is_err());
        assert!(gen_random_ppms(&RandomSpec {
            n_ppms: 0,
            ..spec(0.5, 1)
        })
        .is_err());
    }

    #[test]
    fn derived_seeds_differ_by_coordinate() {
        let a = derive_seed(7, &[0, 1]);
        assert_eq!(a, derive_seed(7, &[0, 1]));
        assert_ne!(a, derive_seed(7, &[1, 0]));
        assert_ne!(a, derive_seed(8, &[0, 1]));
    }
}
