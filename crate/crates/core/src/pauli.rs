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

//! Signed Pauli strings in the symplectic `(x | z)` representation.
//!
//! A [`PauliString`] is `i^k` times a tensor product of Hermitian letters,
//! where the letter on qubit `j` is read off the bit pair `(x_j, z_j)`:
//! `(0,0) = I`, `(1,0) = X`, `(0,1) = Z`, `(1,1) = Y`. Multiplication uses
//! the standard convention `XZ = -iY`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;
use core::str::FromStr;

use crate::error::{Error, Result};

const WORD: usize = 64;

#[inline]
pub(crate) fn word_count(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// Single-qubit Pauli letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PauliLetter {
    I,
    X,
    Y,
    Z,
}

impl PauliLetter {
    pub const ALL: [PauliLetter; 4] = [PauliLetter::I, PauliLetter::X, PauliLetter::Y, PauliLetter::Z];

    pub fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => PauliLetter::I,
            (true, false) => PauliLetter::X,
            (false, true) => PauliLetter::Z,
            (true, true) => PauliLetter::Y,
        }
    }

    pub fn bits(self) -> (bool, bool) {
        match self {
            PauliLetter::I => (false, false),
            PauliLetter::X => (true, false),
            PauliLetter::Z => (false, true),
            PauliLetter::Y => (true, true),
        }
    }

    /// Whether the letter occupies an X-type port. `Y` occupies both kinds.
    pub fn uses_x_port(self) -> bool {
        self.bits().0
    }

    pub fn uses_z_port(self) -> bool {
        self.bits().1
    }

    pub fn as_char(self) -> char {
        match self {
            PauliLetter::I => 'I',
            PauliLetter::X => 'X',
            PauliLetter::Y => 'Y',
            PauliLetter::Z => 'Z',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'I' | '_' => Some(PauliLetter::I),
            'X' => Some(PauliLetter::X),
            'Y' => Some(PauliLetter::Y),
            'Z' => Some(PauliLetter::Z),
            _ => None,
        }
    }
}

impl fmt::Display for PauliLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Which columns a weight count covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightScope {
    /// Only the first `n` columns (the program qubits).
    Program(usize),
    All,
}

/// A Pauli operator `i^phase_exp * P_0 ⊗ ... ⊗ P_{n-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliString {
    n_qubits: usize,
    x: Vec<u64>,
    z: Vec<u64>,
    phase_exp: u8,
}

impl PauliString {
    pub fn identity(n_qubits: usize) -> Self {
        let w = word_count(n_qubits);
        PauliString {
            n_qubits,
            x: vec![0; w],
            z: vec![0; w],
            phase_exp: 0,
        }
    }

    pub fn from_letters(letters: &[PauliLetter]) -> Self {
        let mut p = Self::identity(letters.len());
        for (j, &l) in letters.iter().enumerate() {
            p.set_letter(j, l);
        }
        p
    }

    /// `letter` on qubit `qubit`, identity elsewhere.
    pub fn single(n_qubits: usize, qubit: usize, letter: PauliLetter) -> Result<Self> {
        if qubit >= n_qubits {
            return Err(Error::QubitOutOfRange { qubit, n_qubits });
        }
        let mut p = Self::identity(n_qubits);
        p.set_letter(qubit, letter);
        Ok(p)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    /// Exponent `k` of the global factor `i^k`, in `0..4`.
    pub fn phase_exp(&self) -> u8 {
        self.phase_exp
    }

    pub fn with_phase_exp(mut self, k: u8) -> Self {
        self.phase_exp = k & 3;
        self
    }

    pub fn set_phase_exp(&mut self, k: u8) {
        self.phase_exp = k & 3;
    }

    /// Multiplies the global factor by `i^k`.
    pub fn mul_phase(&mut self, k: u8) {
        self.phase_exp = (self.phase_exp + k) & 3;
    }

    pub fn negated(mut self) -> Self {
        self.mul_phase(2);
        self
    }

    /// True for a `+1` or `-1` global factor.
    pub fn is_hermitian(&self) -> bool {
        self.phase_exp & 1 == 0
    }

    pub fn is_negative(&self) -> bool {
        self.phase_exp == 2
    }

    /// True when every letter is `I`, whatever the phase.
    pub fn is_identity(&self) -> bool {
        self.x.iter().chain(self.z.iter()).all(|&w| w == 0)
    }

    #[inline]
    pub fn x_bit(&self, j: usize) -> bool {
        self.x[j / WORD] >> (j % WORD) & 1 == 1
    }

    #[inline]
    pub fn z_bit(&self, j: usize) -> bool {
        self.z[j / WORD] >> (j % WORD) & 1 == 1
    }

    pub fn letter(&self, j: usize) -> PauliLetter {
        assert!(j < self.n_qubits, "qubit {j} out of range");
        PauliLetter::from_bits(self.x_bit(j), self.z_bit(j))
    }

    pub fn set_letter(&mut self, j: usize, letter: PauliLetter) {
        assert!(j < self.n_qubits, "qubit {j} out of range");
        let (xb, zb) = letter.bits();
        let mask = 1u64 << (j % WORD);
        let w = j / WORD;
        if xb {
            self.x[w] |= mask;
        } else {
            self.x[w] &= !mask;
        }
        if zb {
            self.z[w] |= mask;
        } else {
            self.z[w] &= !mask;
        }
    }

    pub(crate) fn set_bits(&mut self, j: usize, x: bool, z: bool) {
        self.set_letter(j, PauliLetter::from_bits(x, z));
    }

    pub fn letters(&self) -> impl Iterator<Item = PauliLetter> + '_ {
        (0..self.n_qubits).map(move |j| self.letter(j))
    }

    /// Indices of the non-identity positions, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.x
            .iter()
            .zip(self.z.iter())
            .enumerate()
            .flat_map(|(w, (&xw, &zw))| BitIter(xw | zw).map(move |b| w * WORD + b))
    }

    pub fn x_words(&self) -> &[u64] {
        &self.x
    }

    pub fn z_words(&self) -> &[u64] {
        &self.z
    }

    pub fn weight(&self) -> usize {
        self.x
            .iter()
            .zip(self.z.iter())
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum()
    }

    pub fn weight_in(&self, scope: WeightScope) -> usize {
        match scope {
            WeightScope::All => self.weight(),
            WeightScope::Program(n) => self.weight_range(0..n.min(self.n_qubits)),
        }
    }

    /// Non-identity count over the qubits in `range`.
    pub fn weight_range(&self, range: Range<usize>) -> usize {
        range.filter(|&j| self.x_bit(j) || self.z_bit(j)).count()
    }

    fn check_dims(&self, other: &PauliString) -> Result<()> {
        if self.n_qubits != other.n_qubits {
            return Err(Error::DimensionMismatch {
                left: self.n_qubits,
                right: other.n_qubits,
            });
        }
        Ok(())
    }

    /// Symplectic commutation test; phases are ignored.
    pub fn commutes(&self, other: &PauliString) -> Result<bool> {
        self.check_dims(other)?;
        Ok(self.commutes_unchecked(other))
    }

    #[inline]
    pub(crate) fn commutes_unchecked(&self, other: &PauliString) -> bool {
        let mut parity = 0u32;
        for w in 0..self.x.len() {
            parity ^= ((self.x[w] & other.z[w]) ^ (self.z[w] & other.x[w])).count_ones();
        }
        parity & 1 == 0
    }

    /// The operator product `self · other`.
    pub fn multiply(&self, other: &PauliString) -> Result<PauliString> {
        self.check_dims(other)?;
        let mut out = self.clone();
        out.mul_assign_unchecked(other);
        Ok(out)
    }

    /// `self ← self · other`, assuming equal dimensions.
    pub(crate) fn mul_assign_unchecked(&mut self, other: &PauliString) {
        // Each qubit contributes i (XY, YZ, ZX) or -i (YX, ZY, XZ).
        let mut plus = 0u32;
        let mut minus = 0u32;
        for w in 0..self.x.len() {
            let (x1, z1, x2, z2) = (self.x[w], self.z[w], other.x[w], other.z[w]);
            let p = (x1 & !z1 & x2 & z2) | (x1 & z1 & !x2 & z2) | (!x1 & z1 & x2 & !z2);
            let m = (x1 & z1 & x2 & !z2) | (!x1 & z1 & x2 & z2) | (x1 & !z1 & !x2 & z2);
            plus += p.count_ones();
            minus += m.count_ones();
            self.x[w] = x1 ^ x2;
            self.z[w] = z1 ^ z2;
        }
        let k = self.phase_exp as u32 + other.phase_exp as u32 + plus + 4 * minus - minus;
        self.phase_exp = (k & 3) as u8;
    }

    /// Tensor product `self ⊗ other`; the phases multiply.
    pub fn tensor(&self, other: &PauliString) -> PauliString {
        let n = self.n_qubits + other.n_qubits;
        let mut out = PauliString::identity(n);
        for j in self.support() {
            out.set_bits(j, self.x_bit(j), self.z_bit(j));
        }
        for j in other.support() {
            out.set_bits(self.n_qubits + j, other.x_bit(j), other.z_bit(j));
        }
        out.phase_exp = (self.phase_exp + other.phase_exp) & 3;
        out
    }

    /// The same operator padded with identities up to `n_qubits` columns.
    pub fn padded(&self, n_qubits: usize) -> PauliString {
        assert!(n_qubits >= self.n_qubits);
        let mut out = self.clone();
        out.n_qubits = n_qubits;
        out.x.resize(word_count(n_qubits), 0);
        out.z.resize(word_count(n_qubits), 0);
        out
    }

    /// The first `n_qubits` columns, keeping the phase.
    pub fn truncated(&self, n_qubits: usize) -> PauliString {
        assert!(n_qubits <= self.n_qubits);
        let mut out = PauliString::identity(n_qubits).with_phase_exp(self.phase_exp);
        for j in self.support().take_while(|&j| j < n_qubits) {
            out.set_bits(j, self.x_bit(j), self.z_bit(j));
        }
        out
    }

    /// Concatenated `x | z` bit vector, used for GF(2) elimination.
    pub(crate) fn symplectic_row(&self) -> Vec<u64> {
        let mut v = self.x.clone();
        v.extend_from_slice(&self.z);
        v
    }

    /// Writes the sign prefix (`-`, `+i`, `-i`, nothing for `+1`) and the letters.
    pub fn fmt_letters(&self, f: &mut fmt::Formatter<'_>, columns: Range<usize>) -> fmt::Result {
        match self.phase_exp {
            1 => write!(f, "+i")?,
            2 => write!(f, "-")?,
            3 => write!(f, "-i")?,
            _ => {}
        }
        for j in columns {
            write!(f, "{}", self.letter(j))?;
        }
        Ok(())
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_letters(f, 0..self.n_qubits)
    }
}

impl fmt::Debug for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliString({self})")
    }
}

/// Failure to read a Pauli string such as `-XIZY`.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid Pauli string character {found:?} at offset {offset}")]
pub struct ParsePauliError {
    pub offset: usize,
    pub found: char,
}

/// Splits an optional `+`, `-`, `+i`, `-i` or `i` prefix from `s`.
pub(crate) fn split_sign(s: &str) -> (u8, &str) {
    for (prefix, k) in [("+i", 1), ("-i", 3), ("i", 1), ("+", 0), ("-", 2)] {
        if let Some(rest) = s.strip_prefix(prefix) {
            return (k, rest);
        }
    }
    (0, s)
}

impl FromStr for PauliString {
    type Err = ParsePauliError;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        let (k, body) = split_sign(s);
        let offset0 = s.len() - body.len();
        let mut letters = Vec::with_capacity(body.len());
        for (i, c) in body.char_indices() {
            letters.push(PauliLetter::from_char(c).ok_or(ParsePauliError {
                offset: offset0 + i,
                found: c,
            })?);
        }
        Ok(PauliString::from_letters(&letters).with_phase_exp(k))
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

fn check_mutually_commuting(list: &[PauliString]) -> Result<()> {
    for i in 0..list.len() {
        for j in i + 1..list.len() {
            if !list[i].commutes(&list[j])? {
                return Err(Error::NotCommuting(i, j));
            }
        }
    }
    Ok(())
}

/// Reduced row-echelon basis of the GF(2) span of a list of Pauli strings.
///
/// Each row remembers which original generators were summed to produce it,
/// so any vector in the span can be written back as a product of generators.
#[derive(Debug, Clone)]
pub struct SymplecticBasis {
    n_qubits: usize,
    rows: Vec<BasisRow>,
}

#[derive(Debug, Clone)]
struct BasisRow {
    bits: Vec<u64>,
    combo: Vec<u64>,
    pivot: usize,
}

#[inline]
fn get_bit(v: &[u64], i: usize) -> bool {
    v[i / WORD] >> (i % WORD) & 1 == 1
}

#[inline]
fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

fn first_set(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
}

impl SymplecticBasis {
    pub fn new(generators: &[PauliString]) -> Result<Self> {
        let n_qubits = generators.first().map_or(0, |p| p.n_qubits);
        let combo_words = word_count(generators.len());
        let mut basis = SymplecticBasis {
            n_qubits,
            rows: Vec::new(),
        };
        for (g, p) in generators.iter().enumerate() {
            if p.n_qubits != n_qubits {
                return Err(Error::DimensionMismatch {
                    left: n_qubits,
                    right: p.n_qubits,
                });
            }
            let mut combo = vec![0u64; combo_words];
            combo[g / WORD] |= 1 << (g % WORD);
            let (bits, combo) = basis.reduce(p.symplectic_row(), combo);
            if let Some(pivot) = first_set(&bits) {
                // Clear the new pivot column from the existing rows.
                for row in basis.rows.iter_mut() {
                    if get_bit(&row.bits, pivot) {
                        xor_into(&mut row.bits, &bits);
                        xor_into(&mut row.combo, &combo);
                    }
                }
                let at = basis.rows.partition_point(|r| r.pivot < pivot);
                basis.rows.insert(at, BasisRow { bits, combo, pivot });
            }
        }
        Ok(basis)
    }

    fn reduce(&self, mut bits: Vec<u64>, mut combo: Vec<u64>) -> (Vec<u64>, Vec<u64>) {
        for row in &self.rows {
            if get_bit(&bits, row.pivot) {
                xor_into(&mut bits, &row.bits);
                xor_into(&mut combo, &row.combo);
            }
        }
        (bits, combo)
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    /// Generator indices whose product equals `p` up to phase, or `None` if
    /// `p` lies outside the span.
    pub fn decompose(&self, p: &PauliString) -> Option<Vec<usize>> {
        if p.n_qubits != self.n_qubits {
            return None;
        }
        let combo_words = self.rows.first().map_or(0, |r| r.combo.len());
        let mut combo = vec![0u64; combo_words];
        let mut bits = p.symplectic_row();
        for row in &self.rows {
            if get_bit(&bits, row.pivot) {
                xor_into(&mut bits, &row.bits);
                xor_into(&mut combo, &row.combo);
            }
        }
        if bits.iter().any(|&w| w != 0) {
            return None;
        }
        let mut out = Vec::new();
        for (w, &word) in combo.iter().enumerate() {
            out.extend(BitIter(word).map(|b| w * WORD + b));
        }
        Some(out)
    }
}

/// Whether two mutually commuting lists generate the same signed group.
///
/// The GF(2) spans must agree, and every member of `b`, rebuilt as a product
/// of members of `a`, must carry exactly the sign it has in `b`.
pub fn span_equal(a: &[PauliString], b: &[PauliString]) -> Result<bool> {
    if let (Some(p), Some(q)) = (a.first(), b.first()) {
        if p.n_qubits != q.n_qubits {
            return Err(Error::DimensionMismatch {
                left: p.n_qubits,
                right: q.n_qubits,
            });
        }
    }
    check_mutually_commuting(a)?;
    check_mutually_commuting(b)?;
    let basis_a = SymplecticBasis::new(a)?;
    let basis_b = SymplecticBasis::new(b)?;
    if basis_a.rank() != basis_b.rank() {
        return Ok(false);
    }
    let n = a.first().or(b.first()).map_or(0, |p| p.n_qubits);
    for target in b {
        let Some(parts) = basis_a.decompose(target) else {
            return Ok(false);
        };
        let mut rebuilt = PauliString::identity(n);
        for i in parts {
            rebuilt.mul_assign_unchecked(&a[i]);
        }
        if rebuilt != *target {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    #[test]
    fn letters_round_trip_through_bits() {
        for l in PauliLetter::ALL {
            let (x, z) = l.bits();
            assert_eq!(PauliLetter::from_bits(x, z), l);
        }
        assert!(PauliLetter::Y.uses_x_port() && PauliLetter::Y.uses_z_port());
    }

    #[test]
    fn commutation_examples() {
        assert!(p("XX").commutes(&p("ZZ")).unwrap());
        assert!(!p("XI").commutes(&p("ZI")).unwrap());
        assert!(!p("IXZY").commutes(&p("IZZY")).unwrap());
        assert_eq!(
            p("X").commutes(&p("XX")),
            Err(Error::DimensionMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn x_times_z_is_minus_i_y() {
        let r = p("X").multiply(&p("Z")).unwrap();
        assert_eq!(r.letter(0), PauliLetter::Y);
        assert_eq!(r.phase_exp(), 3);
        let r = p("Z").multiply(&p("X")).unwrap();
        assert_eq!(r, p("+iY"));
    }

    #[test]
    fn products() {
        assert_eq!(p("XZI").multiply(&p("XIX")).unwrap(), p("IZX"));
        assert_eq!(p("XX").multiply(&p("ZZ")).unwrap(), p("-YY"));
        let q = p("-XYZ");
        assert_eq!(q.multiply(&q).unwrap(), PauliString::identity(3));
    }

    #[test]
    fn weights() {
        assert_eq!(p("XIZY").weight(), 3);
        assert_eq!(PauliString::identity(5).weight(), 0);
        let tail = p("XI").tensor(&p("Z"));
        assert_eq!(tail.weight_in(WeightScope::Program(2)), 1);
        assert_eq!(tail.weight_in(WeightScope::All), 2);
    }

    #[test]
    fn display_and_parse() {
        for s in ["-XIZY", "XX", "+iZ", "-iY", ""] {
            assert_eq!(p(s).to_string(), s);
        }
        assert_eq!(p("+XZ").to_string(), "XZ");
        let err = "XQ".parse::<PauliString>().unwrap_err();
        assert_eq!(err, ParsePauliError { offset: 1, found: 'Q' });
    }

    #[test]
    fn multi_word_strings() {
        let mut a = PauliString::identity(130);
        let mut b = PauliString::identity(130);
        a.set_letter(3, PauliLetter::X);
        a.set_letter(100, PauliLetter::Z);
        b.set_letter(100, PauliLetter::X);
        b.set_letter(129, PauliLetter::Y);
        assert!(!a.commutes(&b).unwrap());
        let c = a.multiply(&b).unwrap();
        assert_eq!(c.letter(100), PauliLetter::Y);
        assert_eq!(c.phase_exp(), 1);
        assert_eq!(c.support().collect::<Vec<_>>(), [3, 100, 129]);
        assert_eq!(c.truncated(101).weight(), 2);
        assert_eq!(c.padded(200).weight(), 3);
    }

    #[test]
    fn span_examples() {
        let (a, b) = (p("XXI"), p("ZZI"));
        let ab = a.multiply(&b).unwrap();
        assert!(span_equal(&[a.clone(), b.clone()], &[a.clone(), ab]).unwrap());
        assert!(!span_equal(&[a.clone(), b.clone()], core::slice::from_ref(&a)).unwrap());
        assert!(!span_equal(&[a.clone(), b.clone()], &[a.clone(), b.clone().negated()]).unwrap());
        assert_eq!(
            span_equal(&[p("XI"), p("ZI")], &[p("XI")]),
            Err(Error::NotCommuting(0, 1))
        );
    }

    #[test]
    fn span_with_resource_tails_checks_sign() {
        // XX⊗Z₁ and ZZ⊗Z₂; their product is -YY⊗Z₁Z₂.
        let g1 = p("XXZI");
        let g2 = p("ZZIZ");
        let prod = g1.multiply(&g2).unwrap();
        assert_eq!(prod, p("-YYZZ"));
        assert!(span_equal(&[g1.clone(), g2.clone()], &[g1.clone(), p("-YYZZ")]).unwrap());
        assert!(!span_equal(&[g1.clone(), g2], &[g1, p("YYZZ")]).unwrap());
    }

    #[test]
    fn basis_decomposition() {
        let gens = [p("XXII"), p("IXXI"), p("IIXX"), p("XIIX")];
        let basis = SymplecticBasis::new(&gens).unwrap();
        assert_eq!(basis.rank(), 3);
        let parts = basis.decompose(&p("XIXI")).unwrap();
        let mut acc = PauliString::identity(4);
        for i in parts {
            acc = acc.multiply(&gens[i]).unwrap();
        }
        assert_eq!(acc, p("XIXI"));
        assert!(basis.decompose(&p("ZIII")).is_none());
    }
}
