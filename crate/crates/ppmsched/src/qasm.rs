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

//! Reader for the OpenQASM 2.0 subset accepted by the compiler.
//!
//! Accepted statements: the `OPENQASM 2.0` header, `include`, one `qreg`,
//! any number of `creg`s, the gates `h s sdg x y z cx cz swap t tdg rz(expr)`
//! and `measure q[i] -> c[j]`. Angles may use `pi`, `+ - * /` and brackets.
//! Everything else (custom gates, barriers, classical control, whole-register
//! arguments) is rejected.

use std::collections::HashMap;

use ppmsched_core::circuit::{GateCircuit, GateOp, RotationAngle};
use ppmsched_core::clifford::CliffordGate;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum QasmError {
    #[error("line {line}: unsupported gate `{name}`")]
    UnsupportedGate { line: usize, name: String },
    #[error("line {line}: parse error: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: {msg}")]
    Validation { line: usize, msg: String },
}

type Result<T> = std::result::Result<T, QasmError>;

struct Statement {
    line: usize,
    text: String,
}

/// Splits `src` into `;`-terminated statements with the line each starts on.
/// Comments are blanked byte-for-byte first so offsets keep their lines.
fn statements(src: &str) -> Result<Vec<Statement>> {
    let mut cleaned = String::with_capacity(src.len());
    for line in src.split_inclusive('\n') {
        match line.find("//") {
            Some(at) => {
                cleaned.push_str(&line[..at]);
                for c in line[at..].chars() {
                    match c {
                        '\n' | '\r' => cleaned.push(c),
                        _ => cleaned.extend(std::iter::repeat_n(' ', c.len_utf8())),
                    }
                }
            }
            None => cleaned.push_str(line),
        }
    }
    let line_of = |offset: usize| src[..offset].matches('\n').count() + 1;
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in cleaned.char_indices() {
        if c == ';' {
            let raw = &cleaned[start..i];
            let lead = raw.len() - raw.trim_start().len();
            out.push(Statement {
                line: line_of(start + lead),
                text: raw.trim().to_string(),
            });
            start = i + 1;
        }
    }
    let rest = &cleaned[start..];
    if !rest.trim().is_empty() {
        let lead = rest.len() - rest.trim_start().len();
        return Err(QasmError::Parse {
            line: line_of(start + lead),
            msg: format!("missing `;` after `{}`", rest.trim()),
        });
    }
    Ok(out)
}

struct Parser {
    qreg: Option<(String, usize)>,
    cregs: HashMap<String, usize>,
    circuit: Option<GateCircuit>,
}

pub fn parse_qasm_subset(src: &str) -> Result<GateCircuit> {
    let mut p = Parser {
        qreg: None,
        cregs: HashMap::new(),
        circuit: None,
    };
    let src = src.strip_prefix('\u{feff}').unwrap_or(src);
    for (k, st) in statements(src)?.into_iter().enumerate() {
        if st.text.is_empty() {
            continue;
        }
        p.statement(&st, k)?;
    }
    p.circuit.ok_or(QasmError::Validation {
        line: src.lines().count().max(1),
        msg: "no qreg declared".into(),
    })
}

fn parse_err(line: usize, msg: impl Into<String>) -> QasmError {
    QasmError::Parse { line, msg: msg.into() }
}

/// `name[index]` → (name, index).
fn indexed(line: usize, s: &str) -> Result<(&str, usize)> {
    let s = s.trim();
    let open = s
        .find('[')
        .ok_or_else(|| parse_err(line, format!("expected `name[index]`, got `{s}`")))?;
    let inner = s[open + 1..]
        .strip_suffix(']')
        .ok_or_else(|| parse_err(line, format!("expected `]` in `{s}`")))?;
    let name = s[..open].trim();
    if !is_ident(name) {
        return Err(parse_err(line, format!("bad register name `{name}`")));
    }
    let index = inner
        .trim()
        .parse()
        .map_err(|_| parse_err(line, format!("bad index `{inner}`")))?;
    Ok((name, index))
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Parser {
    fn statement(&mut self, st: &Statement, index: usize) -> Result<()> {
        let line = st.line;
        let text = st.text.as_str();
        let (head, rest) = match text.find(|c: char| c.is_whitespace() || c == '(') {
            Some(at) => (&text[..at], text[at..].trim_start()),
            None => (text, ""),
        };
        match head {
            "OPENQASM" => {
                if index != 0 {
                    return Err(parse_err(line, "OPENQASM header must come first"));
                }
                if rest != "2.0" {
                    return Err(parse_err(line, format!("unsupported OpenQASM version `{rest}`")));
                }
                Ok(())
            }
            "include" => Ok(()),
            "qreg" => {
                let (name, size) = indexed(line, rest)?;
                if self.qreg.is_some() {
                    return Err(QasmError::Validation {
                        line,
                        msg: "only one qreg is supported".into(),
                    });
                }
                self.qreg = Some((name.to_string(), size));
                self.circuit = Some(GateCircuit::new(size));
                Ok(())
            }
            "creg" => {
                let (name, size) = indexed(line, rest)?;
                self.cregs.insert(name.to_string(), size);
                Ok(())
            }
            "measure" => {
                let (q, c) = rest
                    .split_once("->")
                    .ok_or_else(|| parse_err(line, "expected `measure q[i] -> c[j]`"))?;
                let qubit = self.qubit(line, q)?;
                let (cname, cidx) = indexed(line, c)?;
                match self.cregs.get(cname) {
                    Some(&size) if cidx < size => {}
                    Some(&size) => {
                        return Err(QasmError::Validation {
                            line,
                            msg: format!("bit {cname}[{cidx}] out of range for creg of size {size}"),
                        })
                    }
                    None => {
                        return Err(QasmError::Validation {
                            line,
                            msg: format!("undeclared creg `{cname}`"),
                        })
                    }
                }
                self.push(line, GateOp::Measure(qubit))
            }
            _ => self.gate(line, head, rest),
        }
    }

    fn qubit(&self, line: usize, arg: &str) -> Result<usize> {
        let (qname, size) = self.qreg.as_ref().ok_or(QasmError::Validation {
            line,
            msg: "gate before qreg declaration".into(),
        })?;
        let (name, index) = indexed(line, arg)?;
        if name != qname {
            return Err(QasmError::Validation {
                line,
                msg: format!("unknown register `{name}`"),
            });
        }
        if index >= *size {
            return Err(QasmError::Validation {
                line,
                msg: format!("qubit {name}[{index}] out of range for qreg of size {size}"),
            });
        }
        Ok(index)
    }

    fn push(&mut self, line: usize, op: GateOp) -> Result<()> {
        let circuit = self.circuit.as_mut().ok_or(QasmError::Validation {
            line,
            msg: "gate before qreg declaration".into(),
        })?;
        circuit.push(op).map_err(|e| QasmError::Validation {
            line,
            msg: e.to_string(),
        })
    }

    fn gate(&mut self, line: usize, name: &str, rest: &str) -> Result<()> {
        if !is_ident(name) {
            return Err(parse_err(line, format!("unexpected `{name}`")));
        }
        let (param, args) = if let Some(after) = rest.strip_prefix('(') {
            let close = after.rfind(')').ok_or_else(|| parse_err(line, "unclosed `(`"))?;
            (Some(&after[..close]), after[close + 1..].trim())
        } else {
            (None, rest)
        };
        let arity = match name {
            "h" | "s" | "sdg" | "x" | "y" | "z" | "t" | "tdg" | "rz" => 1,
            "cx" | "CX" | "cz" | "swap" => 2,
            _ => {
                return Err(QasmError::UnsupportedGate {
                    line,
                    name: name.to_string(),
                })
            }
        };
        if (name == "rz") != param.is_some() {
            return Err(parse_err(line, format!("wrong parameter list for `{name}`")));
        }
        let qubits = args
            .split(',')
            .map(|a| self.qubit(line, a))
            .collect::<Result<Vec<_>>>()?;
        if qubits.len() != arity {
            return Err(parse_err(
                line,
                format!("`{name}` takes {arity} qubit(s), got {}", qubits.len()),
            ));
        }
        let q = qubits[0];
        let op = match name {
            "h" => GateOp::Clifford(CliffordGate::H(q)),
            "s" => GateOp::Clifford(CliffordGate::S(q)),
            "sdg" => GateOp::Clifford(CliffordGate::Sdg(q)),
            "x" => GateOp::Clifford(CliffordGate::X(q)),
            "y" => GateOp::Clifford(CliffordGate::Y(q)),
            "z" => GateOp::Clifford(CliffordGate::Z(q)),
            "cx" | "CX" => GateOp::Clifford(CliffordGate::Cx(q, qubits[1])),
            "cz" => GateOp::Clifford(CliffordGate::Cz(q, qubits[1])),
            "swap" => GateOp::Clifford(CliffordGate::Swap(q, qubits[1])),
            "t" => GateOp::Rotation {
                qubit: q,
                angle: RotationAngle::T,
            },
            "tdg" => GateOp::Rotation {
                qubit: q,
                angle: RotationAngle::Tdg,
            },
            _ => {
                let lambda = eval_expr(param.unwrap_or_default()).map_err(|m| parse_err(line, m))?;
                GateOp::Rotation {
                    qubit: q,
                    angle: RotationAngle::Rz(lambda / 2.0),
                }
            }
        };
        self.push(line, op)
    }
}

/// Evaluates a real expression over literals, `pi`, `+ - * /` and brackets.
pub fn eval_expr(src: &str) -> std::result::Result<f64, String> {
    let tokens = tokenize(src)?;
    let mut pos = 0;
    let v = expr(&tokens, &mut pos)?;
    if pos != tokens.len() {
        return Err(format!("trailing input in expression `{src}`"));
    }
    if !v.is_finite() {
        return Err(format!("expression `{src}` is not finite"));
    }
    Ok(v)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Op(char),
}

fn tokenize(src: &str) -> std::result::Result<Vec<Tok>, String> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if "+-*/()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else if c.is_ascii_digit() || c == '.' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
                i += 1;
                if i < chars.len() && (chars[i] == '+' || chars[i] == '-') {
                    i += 1;
                }
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
            }
            let lit: String = chars[start..i].iter().collect();
            out.push(Tok::Num(lit.parse().map_err(|_| format!("bad number `{lit}`"))?));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            if word != "pi" {
                return Err(format!("unknown identifier `{word}`"));
            }
            out.push(Tok::Num(std::f64::consts::PI));
        } else {
            return Err(format!("unexpected `{c}` in expression"));
        }
    }
    Ok(out)
}

fn expr(t: &[Tok], pos: &mut usize) -> std::result::Result<f64, String> {
    let mut v = term(t, pos)?;
    while let Some(Tok::Op(op @ ('+' | '-'))) = t.get(*pos) {
        *pos += 1;
        let rhs = term(t, pos)?;
        v = if *op == '+' { v + rhs } else { v - rhs };
    }
    Ok(v)
}

fn term(t: &[Tok], pos: &mut usize) -> std::result::Result<f64, String> {
    let mut v = factor(t, pos)?;
    while let Some(Tok::Op(op @ ('*' | '/'))) = t.get(*pos) {
        *pos += 1;
        let rhs = factor(t, pos)?;
        v = if *op == '*' { v * rhs } else { v / rhs };
    }
    Ok(v)
}

fn factor(t: &[Tok], pos: &mut usize) -> std::result::Result<f64, String> {
    match t.get(*pos) {
        Some(Tok::Num(v)) => {
            *pos += 1;
            Ok(*v)
        }
        Some(Tok::Op('-')) => {
            *pos += 1;
            Ok(-factor(t, pos)?)
        }
        Some(Tok::Op('+')) => {
            *pos += 1;
            factor(t, pos)
        }
        Some(Tok::Op('(')) => {
            *pos += 1;
            let v = expr(t, pos)?;
            if t.get(*pos) != Some(&Tok::Op(')')) {
                return Err("missing `)`".into());
            }
            *pos += 1;
            Ok(v)
        }
        _ => Err("expected a number".into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn header_free_input() {
        let c = parse_qasm_subset("qreg q[1]; h q[0]; t q[0];").unwrap();
        assert_eq!(
            c.ops(),
            [
                GateOp::Clifford(CliffordGate::H(0)),
                GateOp::Rotation {
                    qubit: 0,
                    angle: RotationAngle::T
                }
            ]
        );
    }

    #[test]
    fn rz_stores_half_angle() {
        let c = parse_qasm_subset("qreg q[1];\nrz(pi/2) q[0];").unwrap();
        match c.ops()[0] {
            GateOp::Rotation {
                angle: RotationAngle::Rz(theta),
                ..
            } => {
                assert!((theta - PI / 4.0).abs() < 1e-15)
            }
            ref other => panic!("{other:?}"),
        }
    }

    #[test]
    fn full_program() {
        let src = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n// two qubits\nqreg q[2];\ncreg c[2];\n\
                   cx q[0],q[1];\ntdg q[1];\nswap q[0], q[1];\nmeasure q[0] -> c[0];\nmeasure q[1] -> c[1];\n";
        let c = parse_qasm_subset(src).unwrap();
        assert_eq!(c.n_qubits(), 2);
        assert_eq!(c.ops().len(), 5);
        assert_eq!(c.ops()[4], GateOp::Measure(1));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_qasm_subset("qreg q[2];\ncx q[0],q[2];").unwrap_err();
        assert!(matches!(e, QasmError::Validation { line: 2, .. }), "{e}");
        let e = parse_qasm_subset("qreg q[2];\n\nccx q[0],q[1],q[1];").unwrap_err();
        assert_eq!(
            e,
            QasmError::UnsupportedGate {
                line: 3,
                name: "ccx".into()
            }
        );
        let e = parse_qasm_subset("qreg q[2];\nh q[0]\n").unwrap_err();
        assert!(matches!(e, QasmError::Parse { line: 2, .. }), "{e}");
        let e = parse_qasm_subset("qreg q[2];\nbarrier q[0],q[1];").unwrap_err();
        assert!(matches!(e, QasmError::UnsupportedGate { line: 2, .. }));
        let e = parse_qasm_subset("qreg q[2];\nqreg r[1];").unwrap_err();
        assert!(matches!(e, QasmError::Validation { line: 2, .. }));
        let e = parse_qasm_subset("qreg q[2];\nrz(foo) q[0];").unwrap_err();
        assert!(matches!(e, QasmError::Parse { line: 2, .. }));
        let e = parse_qasm_subset("qreg q[2];\ncx q[1],q[1];").unwrap_err();
        assert!(matches!(e, QasmError::Validation { line: 2, .. }));
        let e = parse_qasm_subset("qreg q[1];\ncreg c[1];\nmeasure q[0] -> c[3];").unwrap_err();
        assert!(matches!(e, QasmError::Validation { line: 3, .. }));
    }

    #[test]
    fn comments_and_crlf() {
        let src = "qreg q[1]; // register\r\n// h q[0];\r\ns q[0];\r\n";
        let c = parse_qasm_subset(src).unwrap();
        assert_eq!(c.ops(), [GateOp::Clifford(CliffordGate::S(0))]);
    }

    #[test]
    fn expressions() {
        assert!((eval_expr("-pi/4").unwrap() + PI / 4.0).abs() < 1e-15);
        assert!((eval_expr("3*pi/(2+2)").unwrap() - 0.75 * PI).abs() < 1e-15);
        assert_eq!(eval_expr("1.5e-1").unwrap(), 0.15);
        assert!(eval_expr("1/0").is_err());
        assert!(eval_expr("(1").is_err());
    }
}
