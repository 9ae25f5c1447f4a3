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

//! Clifford tableau invariants under long random gate sequences.

mod common;

use rand::Rng;

use ppmsched_core::clifford::{CliffordGate, CliffordTableau};
use ppmsched_core::random::rng_for;
use ppmsched_core::PauliString;

fn random_gate<R: Rng>(rng: &mut R, n: usize) -> CliffordGate {
    let a = rng.gen_range(0..n);
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

#[test]
fn stays_symplectic_over_ten_thousand_gates() {
    let n = 7;
    let mut rng = rng_for(1);
    let mut t = CliffordTableau::identity(n);
    for step in 0..10_000 {
        t.append(random_gate(&mut rng, n)).unwrap();
        if step % 500 == 0 {
            assert!(t.is_symplectic(), "lost symplecticity at step {step}");
        }
    }
    assert!(t.is_symplectic());
}

#[test]
fn conjugation_is_a_group_automorphism() {
    let n = 5;
    let mut rng = rng_for(2);
    for _ in 0..50 {
        let mut t = CliffordTableau::identity(n);
        for _ in 0..40 {
            t.append(random_gate(&mut rng, n)).unwrap();
        }
        for _ in 0..20 {
            let a = common::random_phased(&mut rng, n);
            let b = common::random_phased(&mut rng, n);
            let (ca, cb) = (t.conjugate(&a).unwrap(), t.conjugate(&b).unwrap());
            assert_eq!(ca.commutes(&cb).unwrap(), a.commutes(&b).unwrap());
            assert_eq!(
                t.conjugate(&a.multiply(&b).unwrap()).unwrap(),
                ca.multiply(&cb).unwrap()
            );
            assert_eq!(ca.is_hermitian(), a.is_hermitian());
            assert_eq!(t.apply(&ca).unwrap(), a);
            assert_eq!(t.conjugate(&t.apply(&a).unwrap()).unwrap(), a);
            assert_eq!(t.inverse().conjugate(&a).unwrap(), t.apply(&a).unwrap());
        }
    }
}

#[test]
fn gate_followed_by_inverse_is_identity() {
    let n = 4;
    let mut rng = rng_for(3);
    for _ in 0..500 {
        let g = random_gate(&mut rng, n);
        let t = CliffordTableau::identity(n).then(g).unwrap().then(g.inverse()).unwrap();
        assert_eq!(t, CliffordTableau::identity(n), "{g}");
    }
}

#[test]
fn hermitian_images_stay_hermitian() {
    let n = 6;
    let mut rng = rng_for(4);
    let mut t = CliffordTableau::identity(n);
    for _ in 0..2_000 {
        t.append(random_gate(&mut rng, n)).unwrap();
    }
    for j in 0..n {
        assert!(t.image_of_x(j).is_hermitian());
        assert!(t.image_of_z(j).is_hermitian());
        let p: PauliString = PauliString::single(n, j, ppmsched_core::PauliLetter::Y).unwrap();
        assert!(t.conjugate(&p).unwrap().is_hermitian());
    }
}

#[test]
fn out_of_range_gates_are_rejected() {
    let mut t = CliffordTableau::identity(2);
    assert!(t.append(CliffordGate::H(2)).is_err());
    assert!(t.append(CliffordGate::Cx(0, 0)).is_err());
    assert!(t.conjugate(&PauliString::identity(3)).is_err());
}
