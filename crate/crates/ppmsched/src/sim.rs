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

//! Dense-matrix oracle for checking the symbolic algebra on small instances.
//!
//! Qubit 0 is the most significant tensor factor: basis state `|b_0 … b_{n-1}⟩`
//! has index `Σ b_j 2^{n-1-j}`. Matrices are limited to [`MAX_QUBITS`] qubits.

use num_complex::Complex64;

use ppmsched_core::circuit::{GateCircuit, GateOp, Ppr};
use ppmsched_core::clifford::{CliffordGate, CliffordTableau};
use ppmsched_core::pbc::PbcProgram;
use ppmsched_core::{PauliLetter, PauliString};

pub const MAX_QUBITS: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SimError {
    #[error("{0} qubits exceeds the dense-matrix limit of {MAX_QUBITS}")]
    TooLarge(usize),
    #[error("matrix shapes differ: {0} vs {1}")]
    Shape(usize, usize),
    #[error("circuit contains a measurement at op {0}")]
    Measurement(usize),
}

type Result<T> = std::result::Result<T, SimError>;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// Square complex matrix, column-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl Matrix {
    pub fn zeros(dim: usize) -> Self {
        Matrix {
            dim,
            data: vec![ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = ONE;
        }
        m
    }

    pub fn from_rows(rows: &[&[Complex64]]) -> Self {
        let dim = rows.len();
        let mut m = Self::zeros(dim);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), dim);
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, v);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.data[c * self.dim + r]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Complex64) {
        self.data[c * self.dim + r] = v;
    }

    fn column_mut(&mut self, c: usize) -> &mut [Complex64] {
        &mut self.data[c * self.dim..(c + 1) * self.dim]
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.dim, other.dim);
        let d = self.dim;
        let mut out = Matrix::zeros(d);
        for c in 0..d {
            for k in 0..d {
                let b = other.data[c * d + k];
                if b == ZERO {
                    continue;
                }
                for r in 0..d {
                    out.data[c * d + r] += self.data[k * d + r] * b;
                }
            }
        }
        out
    }

    pub fn adjoint(&self) -> Matrix {
        let d = self.dim;
        let mut out = Matrix::zeros(d);
        for r in 0..d {
            for c in 0..d {
                out.set(c, r, self.get(r, c).conj());
            }
        }
        out
    }

    pub fn scale(&self, s: Complex64) -> Matrix {
        Matrix {
            dim: self.dim,
            data: self.data.iter().map(|&v| v * s).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.dim, other.dim);
        Matrix {
            dim: self.dim,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Matrix) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

fn check_size(n: usize) -> Result<usize> {
    if n > MAX_QUBITS {
        return Err(SimError::TooLarge(n));
    }
    Ok(1 << n)
}

#[inline]
fn bit_of(index: usize, qubit: usize, n: usize) -> usize {
    index >> (n - 1 - qubit) & 1
}

pub fn pauli_matrix(p: &PauliString) -> Result<Matrix> {
    let n = p.n_qubits();
    let dim = check_size(n)?;
    let global = I.powu(p.phase_exp() as u32);
    let mut flip = 0usize;
    for j in p.support() {
        if p.x_bit(j) {
            flip |= 1 << (n - 1 - j);
        }
    }
    let mut m = Matrix::zeros(dim);
    for c in 0..dim {
        let mut coeff = global;
        for j in p.support() {
            let b = bit_of(c, j, n);
            let sign = if b == 1 { -ONE } else { ONE };
            match p.letter(j) {
                PauliLetter::Z => coeff *= sign,
                PauliLetter::Y => coeff *= I * sign,
                _ => {}
            }
        }
        m.set(c ^ flip, c, coeff);
    }
    Ok(m)
}

/// `exp(-iθP) = cos θ · 1 - i sin θ · P`.
pub fn ppr_unitary(r: &Ppr) -> Result<Matrix> {
    let m = pauli_matrix(&r.pauli)?;
    let theta = r.angle.theta();
    Ok(Matrix::identity(m.dim())
        .scale(Complex64::new(theta.cos(), 0.0))
        .add(&m.scale(Complex64::new(0.0, -theta.sin()))))
}

fn apply_1q(state: &mut [Complex64], q: usize, n: usize, g: [[Complex64; 2]; 2]) {
    let stride = 1 << (n - 1 - q);
    for i in 0..state.len() {
        if i & stride == 0 {
            let (a, b) = (state[i], state[i | stride]);
            state[i] = g[0][0] * a + g[0][1] * b;
            state[i | stride] = g[1][0] * a + g[1][1] * b;
        }
    }
}

/// `g` acts on `|b_a b_b⟩` with `b_a` the high bit.
fn apply_2q(state: &mut [Complex64], a: usize, b: usize, n: usize, g: [[Complex64; 4]; 4]) {
    let sa = 1 << (n - 1 - a);
    let sb = 1 << (n - 1 - b);
    for i in 0..state.len() {
        if i & sa == 0 && i & sb == 0 {
            let idx = [i, i | sb, i | sa, i | sa | sb];
            let v = idx.map(|k| state[k]);
            for (r, &k) in idx.iter().enumerate() {
                state[k] = (0..4).map(|c| g[r][c] * v[c]).sum();
            }
        }
    }
}

fn gate_1q(gate: &CliffordGate) -> Option<[[Complex64; 2]; 2]> {
    let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    Some(match gate {
        CliffordGate::H(_) => [[h, h], [h, -h]],
        CliffordGate::S(_) => [[ONE, ZERO], [ZERO, I]],
        CliffordGate::Sdg(_) => [[ONE, ZERO], [ZERO, -I]],
        CliffordGate::X(_) => [[ZERO, ONE], [ONE, ZERO]],
        CliffordGate::Y(_) => [[ZERO, -I], [I, ZERO]],
        CliffordGate::Z(_) => [[ONE, ZERO], [ZERO, -ONE]],
        _ => return None,
    })
}

fn apply_gate(state: &mut [Complex64], n: usize, op: &GateOp) {
    match op {
        GateOp::Clifford(g) => {
            let (qs, arity) = g.qubits();
            if arity == 1 {
                apply_1q(state, qs[0], n, gate_1q(g).expect("single-qubit gate"));
                return;
            }
            let (o, l) = (ZERO, ONE);
            let m = match g {
                CliffordGate::Cx(..) => [[l, o, o, o], [o, l, o, o], [o, o, o, l], [o, o, l, o]],
                CliffordGate::Cz(..) => [[l, o, o, o], [o, l, o, o], [o, o, l, o], [o, o, o, -l]],
                _ => [[l, o, o, o], [o, o, l, o], [o, l, o, o], [o, o, o, l]],
            };
            apply_2q(state, qs[0], qs[1], n, m);
        }
        GateOp::Rotation { qubit, angle } => {
            let t = angle.theta();
            let m = [
                [Complex64::from_polar(1.0, -t), ZERO],
                [ZERO, Complex64::from_polar(1.0, t)],
            ];
            apply_1q(state, *qubit, n, m);
        }
        GateOp::Measure(_) => unreachable!("measurements are rejected before simulation"),
    }
}

/// Unitary of a measurement-free circuit; the first op acts first.
pub fn circuit_unitary(c: &GateCircuit) -> Result<Matrix> {
    let n = c.n_qubits();
    let dim = check_size(n)?;
    if let Some(i) = c.ops().iter().position(|op| matches!(op, GateOp::Measure(_))) {
        return Err(SimError::Measurement(i));
    }
    let mut u = Matrix::identity(dim);
    for col in 0..dim {
        let state = u.column_mut(col);
        for op in c.ops() {
            apply_gate(state, n, op);
        }
    }
    Ok(u)
}

/// Unitary of the Clifford gates of `c` alone, in order.
pub fn clifford_part_unitary(c: &GateCircuit) -> Result<Matrix> {
    let mut cliffords = GateCircuit::new(c.n_qubits());
    for op in c.ops() {
        if let GateOp::Clifford(g) = op {
            cliffords.clifford(*g).expect("gate came from a valid circuit");
        }
    }
    circuit_unitary(&cliffords)
}

/// True iff `‖a − λb‖∞ ≤ tol` for the unit scalar `λ` fixed by the
/// largest-modulus entry of `b`.
pub fn equal_up_to_phase(a: &Matrix, b: &Matrix, tol: f64) -> Result<bool> {
    if a.dim != b.dim {
        return Err(SimError::Shape(a.dim, b.dim));
    }
    let (k, bk) = b
        .data
        .iter()
        .enumerate()
        .max_by(|x, y| x.1.norm().total_cmp(&y.1.norm()))
        .map(|(k, v)| (k, *v))
        .unwrap_or((0, ZERO));
    if bk.norm() == 0.0 {
        return Ok(a.data.iter().all(|v| v.norm() <= tol));
    }
    let ratio = a.data[k] / bk;
    if ratio.norm() == 0.0 {
        return Ok(false);
    }
    let lambda = ratio / ratio.norm();
    Ok(a.max_abs_diff(&b.scale(lambda)) <= tol)
}

/// `M_C P M_C†` against the tableau's forward images, for every `X_j`, `Z_j`.
pub fn tableau_matches(t: &CliffordTableau, clifford: &Matrix, tol: f64) -> Result<bool> {
    let n = t.n_qubits();
    let adj = clifford.adjoint();
    for j in 0..n {
        for letter in [PauliLetter::X, PauliLetter::Z] {
            let p = PauliString::single(n, j, letter).expect("index in range");
            let expect = clifford.mul(&pauli_matrix(&p)?).mul(&adj);
            let image = match letter {
                PauliLetter::X => t.image_of_x(j),
                _ => t.image_of_z(j),
            };
            if expect.max_abs_diff(&pauli_matrix(image)?) > tol {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `clifford · R_m ⋯ R_1` for a compiled program.
pub fn compiled_unitary(program: &PbcProgram, clifford: &Matrix) -> Result<Matrix> {
    let dim = check_size(program.n_qubits)?;
    let mut u = Matrix::identity(dim);
    for r in &program.pprs {
        u = ppr_unitary(r)?.mul(&u);
    }
    Ok(clifford.mul(&u))
}

/// The circuit with its terminal measurements removed, plus the measured qubits
/// in order. Fails if a gate follows a measurement.
pub fn split_terminal_measurements(c: &GateCircuit) -> Result<(GateCircuit, Vec<usize>)> {
    let mut gates = GateCircuit::new(c.n_qubits());
    let mut measured = Vec::new();
    for (i, op) in c.ops().iter().enumerate() {
        match op {
            GateOp::Measure(q) => measured.push(*q),
            _ if !measured.is_empty() => return Err(SimError::Measurement(i)),
            _ => gates.push(op.clone()).expect("op came from a valid circuit"),
        }
    }
    Ok((gates, measured))
}

/// Checks a compilation against dense matrices: the tableau against the
/// Clifford gates, `clifford · R_m ⋯ R_1` against the circuit unitary (up to
/// global phase), and each pulled-back measurement `P` against `C† Z_q C`
/// (sign included).
pub fn verify_compilation(circuit: &GateCircuit, program: &PbcProgram, tol: f64) -> Result<bool> {
    let (gates, measured) = split_terminal_measurements(circuit)?;
    let clifford = clifford_part_unitary(&gates)?;
    if !tableau_matches(&program.final_clifford, &clifford, tol)? {
        return Ok(false);
    }
    if !equal_up_to_phase(&circuit_unitary(&gates)?, &compiled_unitary(program, &clifford)?, tol)? {
        return Ok(false);
    }
    if measured.len() != program.terminal_measurements.len() {
        return Ok(false);
    }
    let adj = clifford.adjoint();
    for (&q, observed) in measured.iter().zip(&program.terminal_measurements) {
        let z = PauliString::single(circuit.n_qubits(), q, PauliLetter::Z).expect("qubit in range");
        let expect = adj.mul(&pauli_matrix(&z)?).mul(&clifford);
        if expect.max_abs_diff(&pauli_matrix(observed)?) > tol {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ppmsched_core::circuit::RotationAngle;

    fn p(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    #[test]
    fn small_pauli_matrices() {
        assert_eq!(pauli_matrix(&p("II")).unwrap(), Matrix::identity(4));
        let y = Matrix::from_rows(&[&[ZERO, -I], &[I, ZERO]]);
        assert_eq!(pauli_matrix(&p("Y")).unwrap(), y);
        // Qubit 0 is the high bit: X⊗I maps |00⟩ to |10⟩.
        assert_eq!(pauli_matrix(&p("XI")).unwrap().get(2, 0), ONE);
        assert!(matches!(
            pauli_matrix(&PauliString::identity(11)),
            Err(SimError::TooLarge(11))
        ));
    }

    #[test]
    fn rotation_unitaries() {
        let zero = Ppr {
            pauli: p("XZ"),
            angle: RotationAngle::Rz(0.0),
        };
        assert!(ppr_unitary(&zero).unwrap().max_abs_diff(&Matrix::identity(4)) < 1e-15);
        let half = Ppr {
            pauli: p("Z"),
            angle: RotationAngle::Rz(std::f64::consts::FRAC_PI_2),
        };
        let z = pauli_matrix(&p("Z")).unwrap();
        assert!(ppr_unitary(&half).unwrap().max_abs_diff(&z.scale(-I)) < 1e-15);
        assert!(equal_up_to_phase(&ppr_unitary(&half).unwrap(), &z, 1e-12).unwrap());
    }

    #[test]
    fn circuit_unitaries() {
        let empty = GateCircuit::new(2);
        assert_eq!(circuit_unitary(&empty).unwrap(), Matrix::identity(4));
        let mut hh = GateCircuit::new(1);
        hh.clifford(CliffordGate::H(0)).unwrap();
        hh.clifford(CliffordGate::H(0)).unwrap();
        assert!(circuit_unitary(&hh).unwrap().max_abs_diff(&Matrix::identity(2)) < 1e-15);
        let mut cx = GateCircuit::new(2);
        cx.clifford(CliffordGate::Cx(0, 1)).unwrap();
        let expect = Matrix::from_rows(&[
            &[ONE, ZERO, ZERO, ZERO],
            &[ZERO, ONE, ZERO, ZERO],
            &[ZERO, ZERO, ZERO, ONE],
            &[ZERO, ZERO, ONE, ZERO],
        ]);
        assert_eq!(circuit_unitary(&cx).unwrap(), expect);
        cx.measure(0).unwrap();
        assert_eq!(circuit_unitary(&cx), Err(SimError::Measurement(1)));
    }

    #[test]
    fn phase_equality() {
        let m = pauli_matrix(&p("XY")).unwrap();
        assert!(equal_up_to_phase(&m, &m, 1e-12).unwrap());
        assert!(equal_up_to_phase(&m.scale(I), &m, 1e-12).unwrap());
        let mut h = GateCircuit::new(1);
        h.clifford(CliffordGate::H(0)).unwrap();
        let hm = circuit_unitary(&h).unwrap();
        assert!(!equal_up_to_phase(&hm, &pauli_matrix(&p("X")).unwrap(), 1e-6).unwrap());
        assert!(equal_up_to_phase(&hm, &Matrix::identity(4), 1e-6).is_err());
    }
}
