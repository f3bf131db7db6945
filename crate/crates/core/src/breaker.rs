//! Clausal symmetry breakers.
//!
//! For each existential variable `x` (prefix order) and each symmetry `σ`
//! moving it, the lex-leader constraint
//!
//! ```text
//! (∧_{w <_P x} (w ↔ σ(w))) → (x → σ(x))
//! ```
//!
//! is simplified by four rules: fixed variables drop out of the antecedent,
//! an equivalence `w ↔ ¬w` makes the antecedent unsatisfiable, an
//! equivalence that already entails the consequent makes the implication
//! valid, and an empty antecedent leaves the binary clause `¬x ∨ σ(x)`.
//! Anything else would need auxiliary variables and is reported as an error.

use std::collections::HashSet;

use thiserror::Error;

use crate::clause::Clause;
use crate::lit::{Lit, Var};
use crate::prefix::Prefix;
use crate::qbf::Qbf;
use crate::symmetry::Symmetry;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BreakerError {
    #[error("`{0}` is not a symmetry of the formula")]
    NotASymmetry(String),
    #[error("non-clausal breaker for variable {var} under symmetry `{symmetry}`")]
    NonClausal { var: Var, symmetry: String },
}

enum Simplified {
    Dropped,
    Clause(Clause),
}

/// `a ↔ b` entails `c → d` when `{c, d}` is `{a, b}` or `{¬a, ¬b}`.
fn entails(equiv: (Lit, Lit), implication: (Lit, Lit)) -> bool {
    let (a, b) = equiv;
    let (c, d) = implication;
    (c == a && d == b) || (c == b && d == a) || (c == !a && d == !b) || (c == !b && d == !a)
}

/// Earliest prefix position of a variable that `sym` maps to its negation.
fn first_flip(prefix: &Prefix, sym: &Symmetry) -> Option<usize> {
    sym.entries()
        .filter(|&(v, m)| m == Lit::neg(v))
        .filter_map(|(v, _)| prefix.position(v))
        .min()
}

fn simplify(q: &Qbf, sym: &Symmetry, var: Var) -> Result<Simplified, BreakerError> {
    let prefix = q.prefix();
    let x = Lit::pos(var);
    let image = sym.apply_lit(x);
    let mut antecedent = Vec::new();
    // Only moved variables survive the fixed-variable rule.
    for w in sym.moved_vars().filter(|&w| prefix.precedes(w, var)) {
        let lw = Lit::pos(w);
        let mw = sym.apply_lit(lw);
        if mw == !lw {
            return Ok(Simplified::Dropped);
        }
        antecedent.push((lw, mw));
    }
    if antecedent.iter().any(|&eq| entails(eq, (x, image))) {
        return Ok(Simplified::Dropped);
    }
    if antecedent.is_empty() {
        return Ok(Simplified::Clause(Clause::new([!x, image])));
    }
    Err(BreakerError::NonClausal {
        var,
        symmetry: sym.name().to_string(),
    })
}

/// Clauses of the symmetry breaker for `syms`, in (variable, symmetry)
/// order with duplicates removed. Each entry of `syms` must be a symmetry of
/// `q`.
pub fn breaker_clauses(q: &Qbf, syms: &[Symmetry]) -> Result<Vec<Clause>, BreakerError> {
    if let Some(s) = syms.iter().find(|s| !s.is_symmetry(q)) {
        return Err(BreakerError::NotASymmetry(s.name().to_string()));
    }
    breaker_clauses_unchecked(q, syms)
}

/// [`breaker_clauses`] without verifying that `syms` are symmetries of `q`.
pub fn breaker_clauses_unchecked(
    q: &Qbf,
    syms: &[Symmetry],
) -> Result<Vec<Clause>, BreakerError> {
    let prefix = q.prefix();
    // (position of x, symmetry index, x) for every pair that is not
    // discarded outright by an earlier negated variable
    let mut pending = Vec::new();
    for (k, sym) in syms.iter().enumerate() {
        let flip = first_flip(prefix, sym);
        for v in sym.moved_vars().filter(|&v| prefix.is_existential(v)) {
            let Some(pos) = prefix.position(v) else { continue };
            if flip.is_none_or(|f| pos <= f) {
                pending.push((pos, k, v));
            }
        }
    }
    pending.sort_unstable();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (_, k, var) in pending {
        if let Simplified::Clause(c) = simplify(q, &syms[k], var)? {
            if seen.insert(c.clone()) {
                out.push(c);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prefix::Quantifier::*;

    #[test]
    fn identity_gives_nothing() {
        let p = Prefix::new([(Exists, vec![1, 2])]).unwrap();
        let q = Qbf::new(p, vec![Clause::from_dimacs(&[1, 2])]).unwrap();
        assert_eq!(breaker_clauses(&q, &[Symmetry::identity("id")]), Ok(vec![]));
        assert_eq!(breaker_clauses(&q, &[]), Ok(vec![]));
    }

    #[test]
    fn simple_swap() {
        // ∃1 2. (1 ∨ 2), symmetric under 1 ↔ 2
        let p = Prefix::new([(Exists, vec![1, 2])]).unwrap();
        let q = Qbf::new(p, vec![Clause::from_dimacs(&[1, 2])]).unwrap();
        let s = Symmetry::from_dimacs("swap", &[(1, 2), (2, 1)]);
        assert_eq!(
            breaker_clauses(&q, &[s]).unwrap(),
            vec![Clause::from_dimacs(&[-1, 2])]
        );
    }

    #[test]
    fn non_clausal_antecedent_is_an_error() {
        // ∃1 2 3 4 with (1 2)(3 4): the constraint for 3 keeps 1 ↔ 2 and 2 ↔ 1
        let p = Prefix::new([(Exists, vec![1, 2, 3, 4])]).unwrap();
        let q = Qbf::new(
            p,
            vec![Clause::from_dimacs(&[1, 3]), Clause::from_dimacs(&[2, 4])],
        )
        .unwrap();
        let s = Symmetry::from_dimacs("double", &[(1, 2), (2, 1), (3, 4), (4, 3)]);
        assert!(s.is_symmetry(&q));
        assert_eq!(
            breaker_clauses(&q, &[s]),
            Err(BreakerError::NonClausal {
                var: 3,
                symmetry: "double".into()
            })
        );
    }

    #[test]
    fn rejects_non_symmetry() {
        let p = Prefix::new([(Exists, vec![1, 2])]).unwrap();
        let q = Qbf::new(p, vec![Clause::from_dimacs(&[1])]).unwrap();
        let s = Symmetry::from_dimacs("swap", &[(1, 2), (2, 1)]);
        assert_eq!(
            breaker_clauses(&q, &[s]),
            Err(BreakerError::NotASymmetry("swap".into()))
        );
    }

    #[test]
    fn entailment_cases() {
        let (a, b) = (Lit::pos(1), Lit::neg(2));
        assert!(entails((a, b), (b, a)));
        assert!(entails((a, b), (!a, !b)));
        assert!(!entails((a, b), (a, !b)));
    }
}
