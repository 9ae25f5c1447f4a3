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

//! Clifford tableaux used to push Clifford gates past Pauli rotations.
//!
//! A tableau for the Clifford unitary `C` keeps both directions:
//!
//! - the forward images `C X_j C†` and `C Z_j C†`, exposed through
//!   [`CliffordTableau::image_of_x`] and [`CliffordTableau::image_of_z`];
//! - the inverse images `C† X_j C` and `C† Z_j C`, which
//!   [`CliffordTableau::conjugate`] uses to pull a later Pauli back through
//!   `C`, as in `R_P · C = C · R_{C†PC}`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::pauli::{PauliLetter, PauliString};

/// The supported Clifford gates. Anything else has to be decomposed first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CliffordGate {
    H(usize),
    S(usize),
    Sdg(usize),
    X(usize),
    Y(usize),
    Z(usize),
    /// Control, target.
    Cx(usize, usize),
    Cz(usize, usize),
    Swap(usize, usize),
}

impl CliffordGate {
    pub fn qubits(&self) -> ([usize; 2], usize) {
        use CliffordGate::*;
        match *self {
            H(q) | S(q) | Sdg(q) | X(q) | Y(q) | Z(q) => ([q, q], 1),
            Cx(a, b) | Cz(a, b) | Swap(a, b) => ([a, b], 2),
        }
    }

    pub fn name(&self) -> &'static str {
        use CliffordGate::*;
        match self {
            H(_) => "h",
            S(_) => "s",
            Sdg(_) => "sdg",
            X(_) => "x",
            Y(_) => "y",
            Z(_) => "z",
            Cx(..) => "cx",
            Cz(..) => "cz",
            Swap(..) => "swap",
        }
    }

    pub fn inverse(&self) -> CliffordGate {
        match *self {
            CliffordGate::S(q) => CliffordGate::Sdg(q),
            CliffordGate::Sdg(q) => CliffordGate::S(q),
            g => g,
        }
    }

    pub fn validate(&self, n_qubits: usize) -> Result<()> {
        let (qs, arity) = self.qubits();
        for &q in &qs[..arity] {
            if q >= n_qubits {
                return Err(Error::QubitOutOfRange { qubit: q, n_qubits });
            }
        }
        if arity == 2 && qs[0] == qs[1] {
            return Err(Error::InvalidGate(format!(
                "{} needs two distinct qubits, got {} twice",
                self.name(),
                qs[0]
            )));
        }
        Ok(())
    }

    /// Replaces `p` with `g p g†`. Targets must be in range.
    pub fn conjugate_forward(&self, p: &mut PauliString) {
        let flip = |p: &mut PauliString, cond: bool| {
            if cond {
                p.mul_phase(2);
            }
        };
        match *self {
            CliffordGate::H(q) => {
                let (x, z) = (p.x_bit(q), p.z_bit(q));
                flip(p, x && z);
                p.set_bits(q, z, x);
            }
            CliffordGate::S(q) => {
                // X → Y, Y → -X.
                let (x, z) = (p.x_bit(q), p.z_bit(q));
                flip(p, x && z);
                p.set_bits(q, x, z ^ x);
            }
            CliffordGate::Sdg(q) => {
                // X → -Y, Y → X.
                let (x, z) = (p.x_bit(q), p.z_bit(q));
                flip(p, x && !z);
                p.set_bits(q, x, z ^ x);
            }
            CliffordGate::X(q) => {
                let z = p.z_bit(q);
                flip(p, z);
            }
            CliffordGate::Z(q) => {
                let x = p.x_bit(q);
                flip(p, x);
            }
            CliffordGate::Y(q) => {
                let (x, z) = (p.x_bit(q), p.z_bit(q));
                flip(p, x ^ z);
            }
            CliffordGate::Cx(c, t) => {
                let (xc, zc, xt, zt) = (p.x_bit(c), p.z_bit(c), p.x_bit(t), p.z_bit(t));
                flip(p, xc && zt && !(xt ^ zc));
                p.set_bits(t, xt ^ xc, zt);
                p.set_bits(c, xc, zc ^ zt);
            }
            CliffordGate::Cz(a, b) => {
                let (xa, za, xb, zb) = (p.x_bit(a), p.z_bit(a), p.x_bit(b), p.z_bit(b));
                flip(p, xa && xb && (za ^ zb));
                p.set_bits(a, xa, za ^ xb);
                p.set_bits(b, xb, zb ^ xa);
            }
            CliffordGate::Swap(a, b) => {
                let (xa, za, xb, zb) = (p.x_bit(a), p.z_bit(a), p.x_bit(b), p.z_bit(b));
                p.set_bits(a, xb, zb);
                p.set_bits(b, xa, za);
            }
        }
    }
}

impl fmt::Display for CliffordGate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (qs, arity) = self.qubits();
        if arity == 1 {
            write!(f, "{}({})", self.name(), qs[0])
        } else {
            write!(f, "{}({},{})", self.name(), qs[0], qs[1])
        }
    }
}

/// Tableau of an accumulated Clifford unitary `C`.
#[derive(Clone, PartialEq, Eq)]
pub struct CliffordTableau {
    n_qubits: usize,
    fwd_x: Vec<PauliString>,
    fwd_z: Vec<PauliString>,
    inv_x: Vec<PauliString>,
    inv_z: Vec<PauliString>,
}

fn single_letters(n: usize, letter: PauliLetter) -> Vec<PauliString> {
    (0..n)
        .map(|j| PauliString::single(n, j, letter).expect("index in range"))
        .collect()
}

/// `i^k ∏_j image(P_j)` with `Y = i X Z`.
fn map_through(images_x: &[PauliString], images_z: &[PauliString], p: &PauliString) -> PauliString {
    let mut out = PauliString::identity(p.n_qubits()).with_phase_exp(p.phase_exp());
    for j in p.support() {
        match p.letter(j) {
            PauliLetter::X => out.mul_assign_unchecked(&images_x[j]),
            PauliLetter::Z => out.mul_assign_unchecked(&images_z[j]),
            PauliLetter::Y => {
                out.mul_assign_unchecked(&images_x[j]);
                out.mul_assign_unchecked(&images_z[j]);
                out.mul_phase(1);
            }
            PauliLetter::I => {}
        }
    }
    out
}

impl CliffordTableau {
    pub fn identity(n_qubits: usize) -> Self {
        let xs = single_letters(n_qubits, PauliLetter::X);
        let zs = single_letters(n_qubits, PauliLetter::Z);
        CliffordTableau {
            n_qubits,
            fwd_x: xs.clone(),
            fwd_z: zs.clone(),
            inv_x: xs,
            inv_z: zs,
        }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    /// `C X_j C†`.
    pub fn image_of_x(&self, j: usize) -> &PauliString {
        &self.fwd_x[j]
    }

    /// `C Z_j C†`.
    pub fn image_of_z(&self, j: usize) -> &PauliString {
        &self.fwd_z[j]
    }

    /// Composes `gate` after the current Clifford: `C ← gate · C`.
    pub fn append(&mut self, gate: CliffordGate) -> Result<()> {
        gate.validate(self.n_qubits)?;
        for img in self.fwd_x.iter_mut().chain(self.fwd_z.iter_mut()) {
            gate.conjugate_forward(img);
        }
        // (gC)† P (gC) = C† (g† P g) C, and only the gate's own qubits move.
        let inverse = gate.inverse();
        let (qs, arity) = gate.qubits();
        let mut updates = Vec::with_capacity(2 * arity);
        for &q in &qs[..arity] {
            for letter in [PauliLetter::X, PauliLetter::Z] {
                let mut pulled = PauliString::single(self.n_qubits, q, letter)?;
                inverse.conjugate_forward(&mut pulled);
                updates.push((q, letter, map_through(&self.inv_x, &self.inv_z, &pulled)));
            }
        }
        for (q, letter, img) in updates {
            match letter {
                PauliLetter::X => self.inv_x[q] = img,
                _ => self.inv_z[q] = img,
            }
        }
        Ok(())
    }

    pub fn then(mut self, gate: CliffordGate) -> Result<Self> {
        self.append(gate)?;
        Ok(self)
    }

    fn check_dims(&self, p: &PauliString) -> Result<()> {
        if p.n_qubits() != self.n_qubits {
            return Err(Error::DimensionMismatch {
                left: self.n_qubits,
                right: p.n_qubits(),
            });
        }
        Ok(())
    }

    /// `C† P C`, the operator a later Pauli becomes once pulled back through `C`.
    pub fn conjugate(&self, p: &PauliString) -> Result<PauliString> {
        self.check_dims(p)?;
        Ok(map_through(&self.inv_x, &self.inv_z, p))
    }

    /// `C P C†`.
    pub fn apply(&self, p: &PauliString) -> Result<PauliString> {
        self.check_dims(p)?;
        Ok(map_through(&self.fwd_x, &self.fwd_z, p))
    }

    pub fn inverse(&self) -> CliffordTableau {
        CliffordTableau {
            n_qubits: self.n_qubits,
            fwd_x: self.inv_x.clone(),
            fwd_z: self.inv_z.clone(),
            inv_x: self.fwd_x.clone(),
            inv_z: self.fwd_z.clone(),
        }
    }

    /// Checks the symplectic conditions on both image sets: images of `X_j`
    /// and `Z_j` anticommute, every other pair commutes, and all are Hermitian.
    pub fn is_symplectic(&self) -> bool {
        [(&self.fwd_x, &self.fwd_z), (&self.inv_x, &self.inv_z)]
            .into_iter()
            .all(|(xs, zs)| symplectic(xs, zs))
    }
}

fn symplectic(xs: &[PauliString], zs: &[PauliString]) -> bool {
    let n = xs.len();
    for i in 0..n {
        if !xs[i].is_hermitian() || !zs[i].is_hermitian() {
            return false;
        }
        for j in 0..n {
            if xs[i].commutes_unchecked(&zs[j]) != (i != j) {
                return false;
            }
            if j > i && (!xs[i].commutes_unchecked(&xs[j]) || !zs[i].commutes_unchecked(&zs[j])) {
                return false;
            }
        }
    }
    true
}

impl fmt::Debug for CliffordTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CliffordTableau({} qubits)", self.n_qubits)?;
        for j in 0..self.n_qubits {
            writeln!(f, "  X{j} -> {}  Z{j} -> {}", self.fwd_x[j], self.fwd_z[j])?;
        }
        Ok(())
    }
}
