//! Literal maps that respect the quantifier prefix, and the sidecar file
//! format used to ship them next to a QDIMACS formula.
//!
//! A [`Symmetry`] stores only the images of positive literals of the moved
//! variables. The image of a negative literal is the negation of the image of
//! its variable, so the induced map on literals is negation-consistent by
//! construction.

use std::fmt::Write as _;

use thiserror::Error;

use crate::clause::Clause;
use crate::lit::{Lit, Var};
use crate::prefix::Prefix;
use crate::qbf::Qbf;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymmetryError {
    #[error("invalid symmetry name `{0}`")]
    InvalidName(String),
    #[error("variable 0 in symmetry `{0}`")]
    ZeroVariable(String),
    #[error("variable {var} mapped twice in symmetry `{name}`")]
    DuplicateEntry { name: String, var: Var },
    #[error("symmetry `{0}` is not a bijection on literals")]
    NotBijective(String),
    #[error("symmetry `{name}` mentions variable {var} which is not in the prefix")]
    UnknownVariable { name: String, var: Var },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Symmetry {
    name: String,
    // sorted by variable, identity entries removed
    image: Vec<(Var, Lit)>,
}

fn valid_name(name: &str) -> bool {
    !name.is_empty() && !name.chars().any(|c| c.is_whitespace() || c.is_control())
}

impl Symmetry {
    /// Builds a symmetry from `(variable, image of its positive literal)`
    /// pairs. Identity entries are dropped; unlisted variables are fixed.
    pub fn new<I>(name: impl Into<String>, pairs: I) -> Result<Symmetry, SymmetryError>
    where
        I: IntoIterator<Item = (Var, Lit)>,
    {
        let name = name.into();
        if !valid_name(&name) {
            return Err(SymmetryError::InvalidName(name));
        }
        let mut image: Vec<(Var, Lit)> = pairs.into_iter().collect();
        image.sort_unstable_by_key(|&(v, _)| v);
        if let Some(w) = image.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(SymmetryError::DuplicateEntry { name, var: w[0].0 });
        }
        if image.first().is_some_and(|&(v, _)| v == 0) {
            return Err(SymmetryError::ZeroVariable(name));
        }
        image.retain(|&(v, m)| m != Lit::pos(v));
        // Bijective iff the moved variables are permuted among themselves.
        let mut targets: Vec<Var> = image.iter().map(|(_, m)| m.var()).collect();
        targets.sort_unstable();
        if !targets.iter().eq(image.iter().map(|(v, _)| v)) {
            return Err(SymmetryError::NotBijective(name));
        }
        Ok(Symmetry { name, image })
    }

    /// Convenience constructor from DIMACS pairs. Panics on invalid input.
    pub fn from_dimacs(name: &str, pairs: &[(Var, i32)]) -> Symmetry {
        Symmetry::new(
            name,
            pairs
                .iter()
                .map(|&(v, m)| (v, Lit::from_dimacs(m).expect("0 is not a literal"))),
        )
        .expect("invalid symmetry")
    }

    pub fn identity(name: impl Into<String>) -> Symmetry {
        Symmetry::new(name, []).expect("identity is a symmetry")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Moved variables with the image of their positive literal, by variable.
    pub fn entries(&self) -> impl Iterator<Item = (Var, Lit)> + '_ {
        self.image.iter().copied()
    }

    pub fn moved_vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.image.iter().map(|&(v, _)| v)
    }

    pub fn is_identity(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply_lit(&self, lit: Lit) -> Lit {
        match self.image.binary_search_by_key(&lit.var(), |&(v, _)| v) {
            Ok(i) if lit.is_positive() => self.image[i].1,
            Ok(i) => !self.image[i].1,
            Err(_) => lit,
        }
    }

    pub fn apply_to_clause(&self, clause: &Clause) -> Clause {
        Clause::new(clause.iter().map(|l| self.apply_lit(l)))
    }

    pub fn inverse(&self) -> Symmetry {
        let mut image: Vec<(Var, Lit)> = self
            .image
            .iter()
            .map(|&(v, m)| (m.var(), Lit::new(v, m.is_positive())))
            .collect();
        image.sort_unstable_by_key(|&(v, _)| v);
        Symmetry {
            name: format!("{}^-1", self.name),
            image,
        }
    }

    /// True iff every moved variable stays inside its quantifier block.
    pub fn is_admissible(&self, prefix: &Prefix) -> Result<bool, SymmetryError> {
        for (v, m) in self.entries() {
            let (Some(from), Some(to)) = (prefix.block_of(v), prefix.block_of(m.var())) else {
                let var = if prefix.contains(v) { m.var() } else { v };
                return Err(SymmetryError::UnknownVariable {
                    name: self.name.clone(),
                    var,
                });
            };
            if from != to {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True iff the map is admissible for the prefix of `q` and permutes the
    /// multiset of matrix clauses.
    pub fn is_symmetry(&self, q: &Qbf) -> bool {
        if !matches!(self.is_admissible(q.prefix()), Ok(true)) {
            return false;
        }
        let mut original: Vec<&Clause> = q.matrix().iter().collect();
        let mut mapped: Vec<Clause> = q.matrix().iter().map(|c| self.apply_to_clause(c)).collect();
        original.sort_unstable();
        mapped.sort_unstable();
        original.into_iter().eq(mapped.iter())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymFileError {
    #[error("line {line}: expected `s <name> <var> <lit> ... 0`")]
    Malformed { line: usize },
    #[error("line {line}: invalid token `{token}`")]
    InvalidToken { line: usize, token: String },
    #[error("line {line}: duplicate symmetry name `{name}`")]
    DuplicateName { line: usize, name: String },
    #[error("line {line}: {source}")]
    Symmetry {
        line: usize,
        #[source]
        source: SymmetryError,
    },
}

/// Parses a symmetry sidecar file: one `s <name> v1 m1 v2 m2 ... 0` line per
/// symmetry, `c` comment lines allowed.
pub fn parse_symmetries(text: &str) -> Result<Vec<Symmetry>, SymFileError> {
    let mut out: Vec<Symmetry> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens.len() < 3 || tokens[0] != "s" || tokens[tokens.len() - 1] != "0" {
            return Err(SymFileError::Malformed { line });
        }
        let name = tokens[1];
        let body = &tokens[2..tokens.len() - 1];
        if !body.len().is_multiple_of(2) {
            return Err(SymFileError::Malformed { line });
        }
        let int = |tok: &str| {
            tok.parse::<i32>().map_err(|_| SymFileError::InvalidToken {
                line,
                token: tok.to_string(),
            })
        };
        let mut pairs = Vec::with_capacity(body.len() / 2);
        for pair in body.chunks(2) {
            let v = int(pair[0])?;
            let m = int(pair[1])?;
            if v <= 0 {
                return Err(SymFileError::InvalidToken {
                    line,
                    token: pair[0].to_string(),
                });
            }
            let m = Lit::from_dimacs(m).ok_or_else(|| SymFileError::InvalidToken {
                line,
                token: pair[1].to_string(),
            })?;
            pairs.push((v as Var, m));
        }
        if out.iter().any(|s| s.name() == name) {
            return Err(SymFileError::DuplicateName {
                line,
                name: name.to_string(),
            });
        }
        let sym =
            Symmetry::new(name, pairs).map_err(|source| SymFileError::Symmetry { line, source })?;
        out.push(sym);
    }
    Ok(out)
}

pub fn serialize_symmetries(syms: &[Symmetry]) -> String {
    let mut out = String::new();
    for s in syms {
        write!(out, "s {}", s.name()).unwrap();
        for (v, m) in s.entries() {
            write!(out, " {v} {m}").unwrap();
        }
        out.push_str(" 0\n");
    }
    out
}
