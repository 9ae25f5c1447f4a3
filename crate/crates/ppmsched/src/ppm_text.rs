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

//! Line-oriented text format for PPM circuits.
//!
//! ```text
//! # comment
//! qubits 4
//! resources 1
//! PPM -XIZY r0
//! PPM ZZII
//! ```
//!
//! Each `PPM` line holds an optional sign and one letter per program qubit,
//! optionally followed by `r<k>`: a `Z` on resource qubit `k`.

use std::fmt::Write as _;

use ppmsched_core::circuit::{Ppm, PpmCircuit};
use ppmsched_core::{PauliLetter, PauliString};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {msg}")]
pub struct PpmTextError {
    pub line: usize,
    pub msg: String,
}

fn err(line: usize, msg: impl Into<String>) -> PpmTextError {
    PpmTextError { line, msg: msg.into() }
}

fn header(line: usize, text: &str, key: &str) -> Result<usize, PpmTextError> {
    let mut parts = text.split_whitespace();
    match (parts.next(), parts.next(), parts.next()) {
        (Some(k), Some(v), None) if k == key => v.parse().map_err(|_| err(line, format!("bad `{key}` count `{v}`"))),
        _ => Err(err(line, format!("expected `{key} <count>`"))),
    }
}

pub fn parse_ppm_text(src: &str) -> Result<PpmCircuit, PpmTextError> {
    let mut lines = src
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (l1, t1) = lines.next().ok_or_else(|| err(1, "missing `qubits` header"))?;
    let n = header(l1, t1, "qubits")?;
    let (l2, t2) = lines.next().ok_or_else(|| err(l1 + 1, "missing `resources` header"))?;
    let r = header(l2, t2, "resources")?;
    let mut used = vec![None::<usize>; r];
    let mut ppms = Vec::new();
    let mut last = l2;
    for (line, text) in lines {
        last = line;
        let mut parts = text.split_whitespace();
        if parts.next() != Some("PPM") {
            return Err(err(line, "expected `PPM <pauli> [r<k>]`"));
        }
        let body = parts.next().ok_or_else(|| err(line, "missing Pauli string"))?;
        let tail = parts.next();
        if let Some(extra) = parts.next() {
            return Err(err(line, format!("unexpected `{extra}`")));
        }
        let program: PauliString = body.parse().map_err(|e| err(line, format!("{e} in `{body}`")))?;
        if program.n_qubits() != n {
            return Err(err(line, format!("expected {n} letters, got {}", program.n_qubits())));
        }
        let mut pauli = program.padded(n + r);
        let resource = match tail {
            None => None,
            Some(tok) => {
                let k: usize = tok
                    .strip_prefix('r')
                    .and_then(|d| d.parse().ok())
                    .ok_or_else(|| err(line, format!("bad resource token `{tok}`")))?;
                if k >= r {
                    return Err(err(line, format!("resource r{k} out of range for {r} resources")));
                }
                if let Some(first) = used[k] {
                    return Err(err(
                        line,
                        format!("duplicate resource r{k} (first used on line {first})"),
                    ));
                }
                used[k] = Some(line);
                pauli.set_letter(n + k, PauliLetter::Z);
                Some(k)
            }
        };
        ppms.push(Ppm { pauli, resource });
    }
    if let Some(k) = used.iter().position(Option::is_none) {
        return Err(err(last, format!("resource r{k} is declared but never used")));
    }
    PpmCircuit::new(n, r, ppms).map_err(|e| err(last, e.to_string()))
}

/// Renders one measurement: sign, program letters, then `r<k>` for every
/// resource column that carries a letter.
pub fn render_pauli(p: &PauliString, n_program: usize) -> String {
    let mut out = String::new();
    out.push_str(&p.truncated(n_program).to_string());
    for j in p.support().filter(|&j| j >= n_program) {
        let _ = write!(out, " r{}", j - n_program);
    }
    out
}

pub fn emit_ppm_text(c: &PpmCircuit) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "qubits {}", c.n_program_qubits());
    let _ = writeln!(out, "resources {}", c.n_resource_qubits());
    for m in c.ppms() {
        let _ = writeln!(out, "PPM {}", render_pauli(&m.pauli, c.n_program_qubits()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use ppmsched_core::pauli::WeightScope;

    #[test]
    fn single_line() {
        let c = parse_ppm_text("qubits 4\nresources 1\nPPM XIXI r0\n").unwrap();
        let m = &c.ppms()[0];
        assert_eq!(m.resource, Some(0));
        assert_eq!(m.pauli.weight_in(WeightScope::Program(4)), 2);
        assert_eq!(m.pauli.letter(4), PauliLetter::Z);
    }

    #[test]
    fn round_trip_with_comments_and_crlf() {
        let src = "# demo\r\nqubits 4\r\nresources 2\r\nPPM -XIZY r1\r\n\r\nPPM ZZII\r\nPPM IIIX r0\r\n";
        let c = parse_ppm_text(src).unwrap();
        let text = emit_ppm_text(&c);
        assert_eq!(text, "qubits 4\nresources 2\nPPM -XIZY r1\nPPM ZZII\nPPM IIIX r0\n");
        assert_eq!(parse_ppm_text(&text).unwrap(), c);
    }

    #[test]
    fn rejects_bad_input() {
        let cases = [
            ("qubits 2\nresources 2\nPPM XI r0\nPPM ZZ r0\n", 4),
            ("qubits 2\nresources 0\nPPM XIZ\n", 3),
            ("qubits 2\nresources 0\nPPM XQ\n", 3),
            ("qubits 2\nresources 1\nPPM XX r1\n", 3),
            ("resources 1\nqubits 2\n", 1),
            ("qubits 2\nresources 2\nPPM XX r0\n", 3),
            ("qubits 2\nresources 0\nMEASURE XX\n", 3),
        ];
        for (src, line) in cases {
            let e = parse_ppm_text(src).unwrap_err();
            assert_eq!(e.line, line, "{src:?}: {e}");
        }
    }

    #[test]
    fn render_restructured_tail() {
        let p: PauliString = "-XIZZ".parse().unwrap();
        assert_eq!(render_pauli(&p, 2), "-XI r0 r1");
    }
}
