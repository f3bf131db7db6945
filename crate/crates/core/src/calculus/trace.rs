//! Text format for Q-Res+S proofs.
//!
//! ```text
//! p qrps <max-var> <num-steps>
//! <id> a <matrix-clause-index> 0
//! <id> r <id1> <id2> <pivot-lit> 0
//! <id> u <id1> <reduced-lit> 0
//! <id> y <id1> <sym-name> 0
//! ```
//!
//! Ids run consecutively from 1 and premises must refer to earlier steps.
//! Lines starting with `c` are comments.

use std::fmt::Write as _;

use thiserror::Error;

use super::proof::{Proof, Step};
use crate::lit::{Lit, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceError {
    #[error("line {line}: missing `p qrps` header")]
    MissingHeader { line: usize },
    #[error("line {line}: malformed header")]
    MalformedHeader { line: usize },
    #[error("line {line}: malformed step")]
    MalformedStep { line: usize },
    #[error("line {line}: unknown step tag `{tag}`")]
    UnknownTag { line: usize, tag: String },
    #[error("line {line}: invalid token `{token}`")]
    InvalidToken { line: usize, token: String },
    #[error("line {line}: expected step id {expected}, found {found}")]
    IdGap { line: usize, expected: usize, found: usize },
    #[error("line {line}: step {step} refers to step {premise}, which does not precede it")]
    ForwardReference { line: usize, step: usize, premise: usize },
    #[error("line {line}: literal {lit} exceeds max variable {max}")]
    LiteralOutOfRange { line: usize, lit: Lit, max: Var },
    #[error("header declares {expected} steps, found {found}")]
    StepCountMismatch { expected: usize, found: usize },
}

fn token<T: std::str::FromStr>(tok: &str, line: usize) -> Result<T, TraceError> {
    tok.parse().map_err(|_| TraceError::InvalidToken {
        line,
        token: tok.to_string(),
    })
}

pub fn parse_trace(text: &str) -> Result<Proof, TraceError> {
    let mut header: Option<(Var, usize)> = None;
    let mut steps = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        let toks: Vec<&str> = trimmed.split_whitespace().collect();
        if toks[0] == "p" {
            if header.is_some() {
                return Err(TraceError::MalformedHeader { line });
            }
            let ["p", "qrps", max_var, count] = toks[..] else {
                return Err(TraceError::MalformedHeader { line });
            };
            let max_var: Var = max_var
                .parse()
                .map_err(|_| TraceError::MalformedHeader { line })?;
            let count: usize = count
                .parse()
                .map_err(|_| TraceError::MalformedHeader { line })?;
            header = Some((max_var, count));
            continue;
        }
        let Some((max_var, _)) = header else {
            return Err(TraceError::MissingHeader { line });
        };
        if toks.len() < 3 || toks[toks.len() - 1] != "0" {
            return Err(TraceError::MalformedStep { line });
        }
        let id: usize = token(toks[0], line)?;
        let expected = steps.len() + 1;
        if id != expected {
            return Err(TraceError::IdGap {
                line,
                expected,
                found: id,
            });
        }
        let premise = |tok: &str| -> Result<usize, TraceError> {
            let p: usize = token(tok, line)?;
            if p == 0 || p >= id {
                return Err(TraceError::ForwardReference {
                    line,
                    step: id,
                    premise: p,
                });
            }
            Ok(p)
        };
        let literal = |tok: &str| -> Result<Lit, TraceError> {
            let v: i32 = token(tok, line)?;
            let lit = Lit::from_dimacs(v).ok_or_else(|| TraceError::InvalidToken {
                line,
                token: tok.to_string(),
            })?;
            if lit.var() > max_var {
                return Err(TraceError::LiteralOutOfRange {
                    line,
                    lit,
                    max: max_var,
                });
            }
            Ok(lit)
        };
        let args = &toks[2..toks.len() - 1];
        let step = match (toks[1], args) {
            ("a", [clause]) => {
                let clause: usize = token(clause, line)?;
                if clause == 0 {
                    return Err(TraceError::InvalidToken {
                        line,
                        token: "0".into(),
                    });
                }
                Step::Axiom { clause }
            }
            ("r", [left, right, pivot]) => Step::Resolve {
                left: premise(left)?,
                right: premise(right)?,
                pivot: literal(pivot)?,
            },
            ("u", [p, lit]) => Step::Reduce {
                premise: premise(p)?,
                lit: literal(lit)?,
            },
            ("y", [p, name]) => Step::Symmetry {
                premise: premise(p)?,
                sym: name.to_string(),
            },
            ("a" | "r" | "u" | "y", _) => return Err(TraceError::MalformedStep { line }),
            (tag, _) => {
                return Err(TraceError::UnknownTag {
                    line,
                    tag: tag.to_string(),
                })
            }
        };
        steps.push(step);
    }

    let Some((max_var, count)) = header else {
        return Err(TraceError::MissingHeader {
            line: text.lines().count() + 1,
        });
    };
    if count != steps.len() {
        return Err(TraceError::StepCountMismatch {
            expected: count,
            found: steps.len(),
        });
    }
    Ok(Proof::new(max_var, steps).expect("premises checked while parsing"))
}

pub fn serialize_trace(pf: &Proof) -> String {
    let mut out = String::new();
    writeln!(out, "p qrps {} {}", pf.max_var(), pf.len()).unwrap();
    for (i, step) in pf.steps().iter().enumerate() {
        let id = i + 1;
        match step {
            Step::Axiom { clause } => writeln!(out, "{id} a {clause} 0"),
            Step::Resolve { left, right, pivot } => {
                writeln!(out, "{id} r {left} {right} {pivot} 0")
            }
            Step::Reduce { premise, lit } => writeln!(out, "{id} u {premise} {lit} 0"),
            Step::Symmetry { premise, sym } => writeln!(out, "{id} y {premise} {sym} 0"),
        }
        .unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_axiom() {
        let pf = parse_trace("p qrps 1 1\n1 a 1 0\n").unwrap();
        assert_eq!(pf.steps(), &[Step::Axiom { clause: 1 }]);
        assert_eq!(pf.max_var(), 1);
    }

    #[test]
    fn all_step_kinds_round_trip() {
        let text = "p qrps 4 5\n1 a 2 0\n2 a 5 0\n3 r 1 2 -4 0\n4 u 3 -3 0\n5 y 4 sigma1 0\n";
        let pf = parse_trace(text).unwrap();
        assert_eq!(serialize_trace(&pf), text);
        assert_eq!(
            pf.step(3),
            Some(&Step::Resolve {
                left: 1,
                right: 2,
                pivot: Lit::neg(4)
            })
        );
    }

    #[test]
    fn comments_and_blank_lines() {
        let pf = parse_trace("c hello\np qrps 1 1\n\nc step\n1 a 1 0\n").unwrap();
        assert_eq!(pf.len(), 1);
    }

    #[test]
    fn forward_reference() {
        let err = parse_trace("p qrps 5 1\n1 r 1 3 5 0\n").unwrap_err();
        assert!(matches!(err, TraceError::ForwardReference { step: 1, premise: 1, .. }));
    }

    #[test]
    fn missing_header_and_id_gap() {
        assert!(matches!(
            parse_trace("2 r 1 3 5 0\n").unwrap_err(),
            TraceError::MissingHeader { line: 1 }
        ));
        assert!(matches!(
            parse_trace("p qrps 5 1\n2 r 1 3 5 0\n").unwrap_err(),
            TraceError::IdGap { expected: 1, found: 2, .. }
        ));
    }

    #[test]
    fn tag_and_shape_errors() {
        assert!(matches!(
            parse_trace("p qrps 1 1\n1 x 1 0\n").unwrap_err(),
            TraceError::UnknownTag { .. }
        ));
        assert!(matches!(
            parse_trace("p qrps 1 1\n1 a 1 2 0\n").unwrap_err(),
            TraceError::MalformedStep { .. }
        ));
        assert!(matches!(
            parse_trace("p qrps 1 1\n1 a 1\n").unwrap_err(),
            TraceError::MalformedStep { .. }
        ));
        assert!(matches!(
            parse_trace("p qrps 1 2\n1 a 1 0\n2 u 1 2 0\n").unwrap_err(),
            TraceError::LiteralOutOfRange { .. }
        ));
        assert!(matches!(
            parse_trace("p qrps 1 2\n1 a 1 0\n").unwrap_err(),
            TraceError::StepCountMismatch { expected: 2, found: 1 }
        ));
        assert!(matches!(
            parse_trace("p qrps x 2\n").unwrap_err(),
            TraceError::MalformedHeader { .. }
        ));
        assert!(matches!(
            parse_trace("p qrps 1 1\n1 a 0 0\n").unwrap_err(),
            TraceError::InvalidToken { .. }
        ));
    }
}
