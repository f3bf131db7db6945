use std::collections::HashMap;

use thiserror::Error;

use super::proof::{Proof, Step, StepCounts};
use super::rules::{reduce, resolve, RuleError};
use crate::clause::Clause;
use crate::qbf::Qbf;
use crate::symmetry::Symmetry;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RejectReason {
    #[error("proof has no steps")]
    EmptyProof,
    #[error("last step does not derive the empty clause")]
    NotRefutation,
    #[error("axiom refers to clause {0}, which is not in the matrix")]
    AxiomOutOfRange(usize),
    #[error("{0}")]
    Rule(#[from] RuleError),
    #[error("symmetry rule is disabled")]
    SymmetryRuleDisabled,
    #[error("unknown symmetry `{0}`")]
    UnknownSymmetry(String),
    #[error("`{0}` is not a symmetry of the formula")]
    NotASymmetry(String),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    Reject,
}

/// Outcome of checking a proof.
///
/// `failing_step` is set exactly when the verdict is reject. Step `0` stands
/// for the proof as a whole (an empty proof).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub verdict: Verdict,
    pub failing_step: Option<usize>,
    pub reason: Option<RejectReason>,
    pub counts: StepCounts,
    /// Conclusions of the steps that checked, in order.
    pub conclusions: Vec<Clause>,
}

impl CheckReport {
    pub fn accepted(&self) -> bool {
        self.verdict == Verdict::Accept
    }

    /// True if every step is a valid inference, whether or not the proof
    /// ends in the empty clause.
    pub fn derivation_valid(&self) -> bool {
        matches!(self.reason, None | Some(RejectReason::NotRefutation))
    }

    pub fn conclusion(&self, id: usize) -> Option<&Clause> {
        id.checked_sub(1).and_then(|i| self.conclusions.get(i))
    }

    pub fn is_refutation(&self) -> bool {
        self.accepted()
    }
}

struct Checker<'a> {
    q: &'a Qbf,
    syms: HashMap<&'a str, &'a Symmetry>,
    verified: HashMap<&'a str, bool>,
    allow_sym: bool,
}

impl<'a> Checker<'a> {
    fn symmetry(&mut self, name: &str) -> Result<&'a Symmetry, RejectReason> {
        if !self.allow_sym {
            return Err(RejectReason::SymmetryRuleDisabled);
        }
        let Some((&key, &sym)) = self.syms.get_key_value(name) else {
            return Err(RejectReason::UnknownSymmetry(name.to_string()));
        };
        let q = self.q;
        if !*self.verified.entry(key).or_insert_with(|| sym.is_symmetry(q)) {
            return Err(RejectReason::NotASymmetry(name.to_string()));
        }
        Ok(sym)
    }

    fn step(&mut self, step: &Step, done: &[Clause]) -> Result<Clause, RejectReason> {
        // Premise ids are below the step id by construction of `Proof`.
        let prem = |id: usize| &done[id - 1];
        let prefix = self.q.prefix();
        match step {
            Step::Axiom { clause } => self
                .q
                .clause(*clause)
                .cloned()
                .ok_or(RejectReason::AxiomOutOfRange(*clause)),
            Step::Resolve { left, right, pivot } => {
                Ok(resolve(prem(*left), prem(*right), *pivot, prefix)?)
            }
            Step::Reduce { premise, lit } => Ok(reduce(prem(*premise), *lit, prefix)?),
            Step::Symmetry { premise, sym } => {
                let sym = self.symmetry(sym)?;
                Ok(sym.apply_to_clause(prem(*premise)))
            }
        }
    }
}

/// Checks `pf` as a refutation of `q` in Q-Res, or Q-Res+S when `allow_sym`
/// is set. Symmetry steps name entries of `syms`, each of which must be a
/// symmetry of `q`.
pub fn check_proof(q: &Qbf, syms: &[Symmetry], pf: &Proof, allow_sym: bool) -> CheckReport {
    let mut checker = Checker {
        q,
        syms: syms.iter().map(|s| (s.name(), s)).collect(),
        verified: HashMap::new(),
        allow_sym,
    };
    let counts = pf.counts();
    let mut conclusions = Vec::with_capacity(pf.len());
    let reject = |step, reason, conclusions| CheckReport {
        verdict: Verdict::Reject,
        failing_step: Some(step),
        reason: Some(reason),
        counts,
        conclusions,
    };

    if pf.is_empty() {
        return reject(0, RejectReason::EmptyProof, conclusions);
    }
    for (i, step) in pf.steps().iter().enumerate() {
        match checker.step(step, &conclusions) {
            Ok(c) => conclusions.push(c),
            Err(reason) => return reject(i + 1, reason, conclusions),
        }
    }
    if !conclusions.last().is_some_and(Clause::is_empty) {
        return reject(pf.len(), RejectReason::NotRefutation, conclusions);
    }
    CheckReport {
        verdict: Verdict::Accept,
        failing_step: None,
        reason: None,
        counts,
        conclusions,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::proof::ProofBuilder;
    use crate::families::{family_symmetries, gen_family, Family};
    use crate::lit::Lit;

    #[test]
    fn empty_proof_rejected() {
        let q = gen_family(Family::Quparity, 2).unwrap();
        let r = check_proof(&q, &[], &Proof::default(), true);
        assert_eq!(r.verdict, Verdict::Reject);
        assert_eq!(r.failing_step, Some(0));
        assert_eq!(r.reason, Some(RejectReason::EmptyProof));
    }

    #[test]
    fn axiom_out_of_range() {
        let q = gen_family(Family::Kbkf, 1).unwrap();
        let mut b = ProofBuilder::new(4);
        b.axiom(6);
        let r = check_proof(&q, &[], &b.finish(), false);
        assert_eq!(r.failing_step, Some(1));
        assert_eq!(r.reason, Some(RejectReason::AxiomOutOfRange(6)));
    }

    #[test]
    fn non_refutation_is_valid_derivation() {
        let q = gen_family(Family::Kbkf, 1).unwrap();
        let mut b = ProofBuilder::new(4);
        let c2 = b.axiom(2);
        let b2 = b.axiom(5);
        b.resolve(c2, b2, Lit::neg(4));
        let r = check_proof(&q, &[], &b.finish(), false);
        assert_eq!(r.reason, Some(RejectReason::NotRefutation));
        assert_eq!(r.failing_step, Some(3));
        assert!(r.derivation_valid());
        assert_eq!(r.conclusion(3), Some(&Clause::from_dimacs(&[1, -3])));
    }

    #[test]
    fn symmetry_step_checks() {
        let q = gen_family(Family::Kbkf, 1).unwrap();
        let syms = family_symmetries(Family::Kbkf, 1).unwrap();
        let mut b = ProofBuilder::new(4);
        let c2 = b.axiom(2);
        b.symmetry(c2, "sigma1");
        let pf = b.finish();

        let r = check_proof(&q, &syms, &pf, true);
        assert_eq!(r.reason, Some(RejectReason::NotRefutation));
        assert_eq!(r.conclusion(2), Some(&Clause::from_dimacs(&[2, 3, -4])));

        let r = check_proof(&q, &syms, &pf, false);
        assert_eq!(r.reason, Some(RejectReason::SymmetryRuleDisabled));
        assert_eq!(r.failing_step, Some(2));

        let r = check_proof(&q, &[], &pf, true);
        assert_eq!(r.reason, Some(RejectReason::UnknownSymmetry("sigma1".into())));

        let bogus = [Symmetry::from_dimacs("sigma1", &[(1, -1)])];
        let r = check_proof(&q, &bogus, &pf, true);
        assert_eq!(r.reason, Some(RejectReason::NotASymmetry("sigma1".into())));
    }

    #[test]
    fn rule_errors_surface() {
        let q = gen_family(Family::Kbkf, 1).unwrap();
        let mut b = ProofBuilder::new(4);
        let b1 = b.axiom(4);
        let b2 = b.axiom(5);
        b.resolve(b1, b2, Lit::pos(3));
        let r = check_proof(&q, &[], &b.finish(), false);
        assert_eq!(
            r.reason,
            Some(RejectReason::Rule(RuleError::PivotNotExistential(Lit::pos(3))))
        );
        assert_eq!(r.conclusions.len(), 2);
    }
}
