use thiserror::Error;

use crate::clause::Clause;
use crate::lit::Lit;
use crate::prefix::{Prefix, Quantifier};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuleError {
    #[error("pivot {0} does not occur in the first premise")]
    PivotMissing(Lit),
    #[error("complement of pivot {0} does not occur in the second premise")]
    ComplementMissing(Lit),
    #[error("pivot {0} is not existential")]
    PivotNotExistential(Lit),
    #[error("resolvent {0} is tautological")]
    TautologicalResolvent(Clause),
    #[error("literal {0} does not occur in the premise")]
    LiteralMissing(Lit),
    #[error("literal {0} is not universal")]
    NotUniversal(Lit),
    #[error("premise contains both {0} and its complement")]
    ComplementPresent(Lit),
    #[error("existential literal {blocker} is not before {lit} in the prefix")]
    Blocked { lit: Lit, blocker: Lit },
    #[error("variable of {0} is not quantified")]
    Unquantified(Lit),
}

/// Rule R: resolves `c1 ∋ pivot` with `c2 ∋ ¬pivot` on an existential pivot.
pub fn resolve(c1: &Clause, c2: &Clause, pivot: Lit, prefix: &Prefix) -> Result<Clause, RuleError> {
    match prefix.quantifier_of_lit(pivot) {
        None => return Err(RuleError::Unquantified(pivot)),
        Some(Quantifier::Forall) => return Err(RuleError::PivotNotExistential(pivot)),
        Some(Quantifier::Exists) => {}
    }
    if !c1.contains(pivot) {
        return Err(RuleError::PivotMissing(pivot));
    }
    if !c2.contains(!pivot) {
        return Err(RuleError::ComplementMissing(pivot));
    }
    let resolvent = Clause::new(
        c1.iter()
            .filter(|&l| l != pivot)
            .chain(c2.iter().filter(|&l| l != !pivot)),
    );
    if resolvent.is_tautology() {
        return Err(RuleError::TautologicalResolvent(resolvent));
    }
    Ok(resolvent)
}

/// Rule U: removes universal `lit` from `c` when no existential literal of
/// `c` comes after it in the prefix. Universal literals after `lit` do not
/// block the reduction.
pub fn reduce(c: &Clause, lit: Lit, prefix: &Prefix) -> Result<Clause, RuleError> {
    match prefix.quantifier_of_lit(lit) {
        None => return Err(RuleError::Unquantified(lit)),
        Some(Quantifier::Exists) => return Err(RuleError::NotUniversal(lit)),
        Some(Quantifier::Forall) => {}
    }
    if !c.contains(lit) {
        return Err(RuleError::LiteralMissing(lit));
    }
    if c.contains(!lit) {
        return Err(RuleError::ComplementPresent(lit));
    }
    for k in c.iter() {
        match prefix.quantifier_of_lit(k) {
            None => return Err(RuleError::Unquantified(k)),
            Some(Quantifier::Exists) if !prefix.precedes(k.var(), lit.var()) => {
                return Err(RuleError::Blocked { lit, blocker: k });
            }
            _ => {}
        }
    }
    Ok(c.without(lit))
}
