//! QDIMACS reading and writing.
//!
//! The writer emits a canonical form: header, one line per quantifier block,
//! one line per clause with literals in canonical order, LF line endings and
//! no comments. Canonical files round-trip byte for byte.

use std::fmt::Write as _;

use thiserror::Error;

use crate::clause::Clause;
use crate::lit::{Lit, Var};
use crate::prefix::{Prefix, PrefixError, Quantifier};
use crate::qbf::{Qbf, QbfError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: missing `p cnf` header")]
    MissingHeader { line: usize },
    #[error("line {line}: malformed header")]
    MalformedHeader { line: usize },
    #[error("line {line}: duplicate header")]
    DuplicateHeader { line: usize },
    #[error("line {line}: invalid token `{token}`")]
    InvalidToken { line: usize, token: String },
    #[error("line {line}: variable {var} outside declared range 1..={max}")]
    VariableOutOfRange { line: usize, var: i64, max: Var },
    #[error("line {line}: quantifier line after the first clause")]
    QuantifierAfterClause { line: usize },
    #[error("line {line}: quantifier line not terminated by 0")]
    UnterminatedQuantifier { line: usize },
    #[error("clause not terminated by 0 at end of input")]
    UnterminatedClause,
    #[error("header declares {expected} clauses, found {found}")]
    ClauseCountMismatch { expected: usize, found: usize },
    #[error("{0}")]
    Prefix(#[from] PrefixError),
    #[error("{0}")]
    Qbf(#[from] QbfError),
}

fn parse_int(token: &str, line: usize) -> Result<i64, ParseError> {
    token.parse::<i64>().map_err(|_| ParseError::InvalidToken {
        line,
        token: token.to_string(),
    })
}

fn check_var(v: i64, line: usize, max: Var) -> Result<Var, ParseError> {
    if v < 1 || v > max as i64 {
        return Err(ParseError::VariableOutOfRange { line, var: v, max });
    }
    Ok(v as Var)
}

/// Parses QDIMACS text. Adjacent quantifier lines with the same quantifier
/// are merged into one block.
pub fn parse_qdimacs(text: &str) -> Result<Qbf, ParseError> {
    let mut header: Option<(Var, usize)> = None;
    let mut runs: Vec<(Quantifier, Vec<Var>)> = Vec::new();
    let mut matrix: Vec<Clause> = Vec::new();
    let mut pending: Vec<Lit> = Vec::new();
    let mut in_clauses = false;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let first = tokens.next().unwrap_or_default();

        if first == "p" {
            if header.is_some() {
                return Err(ParseError::DuplicateHeader { line });
            }
            let rest: Vec<&str> = tokens.collect();
            let [fmt, nv, nc] = rest[..] else {
                return Err(ParseError::MalformedHeader { line });
            };
            if fmt != "cnf" {
                return Err(ParseError::MalformedHeader { line });
            }
            let nv = nv
                .parse::<Var>()
                .map_err(|_| ParseError::MalformedHeader { line })?;
            let nc = nc
                .parse::<usize>()
                .map_err(|_| ParseError::MalformedHeader { line })?;
            if i32::try_from(nv).is_err() {
                return Err(ParseError::MalformedHeader { line });
            }
            header = Some((nv, nc));
            continue;
        }

        let Some((max_var, _)) = header else {
            return Err(ParseError::MissingHeader { line });
        };

        if first == "e" || first == "a" {
            if in_clauses {
                return Err(ParseError::QuantifierAfterClause { line });
            }
            let quantifier = if first == "e" {
                Quantifier::Exists
            } else {
                Quantifier::Forall
            };
            let mut vars = Vec::new();
            let mut terminated = false;
            for tok in tokens {
                if terminated {
                    return Err(ParseError::InvalidToken {
                        line,
                        token: tok.to_string(),
                    });
                }
                match parse_int(tok, line)? {
                    0 => terminated = true,
                    v => vars.push(check_var(v, line, max_var)?),
                }
            }
            if !terminated {
                return Err(ParseError::UnterminatedQuantifier { line });
            }
            runs.push((quantifier, vars));
            continue;
        }

        in_clauses = true;
        for tok in std::iter::once(first).chain(tokens) {
            let v = parse_int(tok, line)?;
            if v == 0 {
                matrix.push(Clause::new(pending.drain(..)));
            } else {
                let var = check_var(v.abs(), line, max_var)?;
                pending.push(Lit::new(var, v > 0));
            }
        }
    }

    let Some((num_vars, num_clauses)) = header else {
        return Err(ParseError::MissingHeader {
            line: text.lines().count() + 1,
        });
    };
    if !pending.is_empty() {
        return Err(ParseError::UnterminatedClause);
    }
    if matrix.len() != num_clauses {
        return Err(ParseError::ClauseCountMismatch {
            expected: num_clauses,
            found: matrix.len(),
        });
    }
    let prefix = Prefix::new(runs)?;
    Ok(Qbf::with_num_vars(num_vars, prefix, matrix)?)
}

pub fn serialize_qdimacs(q: &Qbf) -> String {
    let mut out = String::new();
    writeln!(out, "p cnf {} {}", q.num_vars(), q.matrix().len()).unwrap();
    for block in q.prefix().blocks() {
        out.push(block.quantifier.tag());
        for v in &block.vars {
            write!(out, " {v}").unwrap();
        }
        out.push_str(" 0\n");
    }
    for clause in q.matrix() {
        for l in clause.iter() {
            write!(out, "{l} ").unwrap();
        }
        out.push_str("0\n");
    }
    out
}
