use std::collections::HashMap;

use thiserror::Error;

use crate::lit::{Lit, Var};

/// One inference. Premises are 1-based ids of earlier steps.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    /// Rule A: the matrix clause at 1-based `clause`.
    Axiom { clause: usize },
    /// Rule R on `pivot ∈ left`, `¬pivot ∈ right`.
    Resolve { left: usize, right: usize, pivot: Lit },
    /// Rule U removing `lit`.
    Reduce { premise: usize, lit: Lit },
    /// Rule S with the named symmetry.
    Symmetry { premise: usize, sym: String },
}

impl Step {
    pub fn premises(&self) -> impl Iterator<Item = usize> {
        let (a, b) = match *self {
            Step::Axiom { .. } => (None, None),
            Step::Resolve { left, right, .. } => (Some(left), Some(right)),
            Step::Reduce { premise, .. } | Step::Symmetry { premise, .. } => (Some(premise), None),
        };
        a.into_iter().chain(b)
    }

    pub fn kind(&self) -> StepKind {
        match self {
            Step::Axiom { .. } => StepKind::Axiom,
            Step::Resolve { .. } => StepKind::Resolve,
            Step::Reduce { .. } => StepKind::Reduce,
            Step::Symmetry { .. } => StepKind::Symmetry,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum StepKind {
    Axiom,
    Resolve,
    Reduce,
    Symmetry,
}

/// Per-kind step tallies.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct StepCounts {
    pub axioms: usize,
    pub resolutions: usize,
    pub reductions: usize,
    pub symmetries: usize,
}

impl StepCounts {
    /// Applications of R, U and S. Axioms are not counted.
    pub fn rule_steps(&self) -> usize {
        self.resolutions + self.reductions + self.symmetries
    }

    pub fn total(&self) -> usize {
        self.axioms + self.rule_steps()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProofError {
    #[error("step {step} refers to step {premise}, which does not precede it")]
    ForwardReference { step: usize, premise: usize },
}

/// A derivation: steps with ids `1..=len` in order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Proof {
    max_var: Var,
    steps: Vec<Step>,
}

impl Proof {
    /// `max_var` is the variable count recorded in the trace header.
    pub fn new(max_var: Var, steps: Vec<Step>) -> Result<Proof, ProofError> {
        for (i, step) in steps.iter().enumerate() {
            let id = i + 1;
            if let Some(premise) = step.premises().find(|&p| p == 0 || p >= id) {
                return Err(ProofError::ForwardReference { step: id, premise });
            }
        }
        Ok(Proof { max_var, steps })
    }

    pub fn max_var(&self) -> Var {
        self.max_var
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Step by 1-based id.
    pub fn step(&self, id: usize) -> Option<&Step> {
        id.checked_sub(1).and_then(|i| self.steps.get(i))
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn counts(&self) -> StepCounts {
        let mut c = StepCounts::default();
        for s in &self.steps {
            match s.kind() {
                StepKind::Axiom => c.axioms += 1,
                StepKind::Resolve => c.resolutions += 1,
                StepKind::Reduce => c.reductions += 1,
                StepKind::Symmetry => c.symmetries += 1,
            }
        }
        c
    }
}

/// Appends steps and hands out their ids. Axioms are emitted once per
/// matrix clause, on first use.
#[derive(Debug, Default)]
pub struct ProofBuilder {
    max_var: Var,
    steps: Vec<Step>,
    axioms: HashMap<usize, usize>,
}

impl ProofBuilder {
    pub fn new(max_var: Var) -> ProofBuilder {
        ProofBuilder {
            max_var,
            ..ProofBuilder::default()
        }
    }

    fn push(&mut self, step: Step) -> usize {
        debug_assert!(step.premises().all(|p| p >= 1 && p <= self.steps.len()));
        self.steps.push(step);
        self.steps.len()
    }

    pub fn axiom(&mut self, clause: usize) -> usize {
        if let Some(&id) = self.axioms.get(&clause) {
            return id;
        }
        let id = self.push(Step::Axiom { clause });
        self.axioms.insert(clause, id);
        id
    }

    pub fn resolve(&mut self, left: usize, right: usize, pivot: Lit) -> usize {
        self.push(Step::Resolve { left, right, pivot })
    }

    pub fn reduce(&mut self, premise: usize, lit: Lit) -> usize {
        self.push(Step::Reduce { premise, lit })
    }

    pub fn symmetry(&mut self, premise: usize, sym: impl Into<String>) -> usize {
        self.push(Step::Symmetry {
            premise,
            sym: sym.into(),
        })
    }

    pub fn finish(self) -> Proof {
        Proof {
            max_var: self.max_var,
            steps: self.steps,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forward_references_rejected() {
        let steps = vec![Step::Axiom { clause: 1 }, Step::Reduce { premise: 2, lit: Lit::pos(1) }];
        assert_eq!(
            Proof::new(1, steps),
            Err(ProofError::ForwardReference { step: 2, premise: 2 })
        );
        let steps = vec![Step::Symmetry { premise: 0, sym: "s".into() }];
        assert!(Proof::new(1, steps).is_err());
    }

    #[test]
    fn builder_shares_axioms_and_counts() {
        let mut b = ProofBuilder::new(2);
        let a = b.axiom(1);
        let c = b.axiom(2);
        assert_eq!(b.axiom(1), a);
        let r = b.resolve(a, c, Lit::pos(1));
        let s = b.symmetry(r, "sigma1");
        b.reduce(s, Lit::pos(2));
        let pf = b.finish();
        assert_eq!(pf.len(), 5);
        let counts = pf.counts();
        assert_eq!(counts.axioms, 2);
        assert_eq!(counts.rule_steps(), 3);
        assert_eq!(counts.total(), 5);
        assert_eq!(pf.step(3).unwrap().premises().collect::<Vec<_>>(), vec![1, 2]);
    }
}
