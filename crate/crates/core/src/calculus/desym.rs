//! Elimination of symmetry steps.
//!
//! A symmetry step deriving `σ(D)` from `D` is replaced by the image of the
//! (already symmetry-free) derivation of `D` under `σ`: axioms map to the
//! matrix clause `σ(C)`, resolutions to resolutions on `σ(pivot)`, and
//! reductions to reductions of `σ(l)`. Steps are processed in order, so the
//! derivation below each symmetry step has been rewritten before it is
//! mapped. Identical steps are shared and unreachable ones dropped.

use std::collections::HashMap;

use thiserror::Error;

use super::check::{check_proof, RejectReason};
use super::proof::{Proof, Step, StepKind};
use crate::clause::Clause;
use crate::qbf::Qbf;
use crate::symmetry::Symmetry;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DesymError {
    #[error("input proof is invalid at step {step}: {reason}")]
    InvalidInput { step: usize, reason: RejectReason },
}

struct Rewriter<'a> {
    q: &'a Qbf,
    syms: &'a [Symmetry],
    clause_index: HashMap<&'a Clause, usize>,
    out: Vec<Step>,
    dedup: HashMap<Step, usize>,
    images: HashMap<(usize, usize), usize>,
}

impl<'a> Rewriter<'a> {
    fn push(&mut self, step: Step) -> usize {
        if let Some(&id) = self.dedup.get(&step) {
            return id;
        }
        self.out.push(step.clone());
        let id = self.out.len();
        self.dedup.insert(step, id);
        id
    }

    fn map_step(&self, step: &Step, sym: &Symmetry, sym_idx: usize) -> Step {
        let img = |id: usize| self.images[&(id, sym_idx)];
        match step {
            Step::Axiom { clause } => {
                let c = sym.apply_to_clause(self.q.clause(*clause).expect("checked axiom"));
                let clause = *self
                    .clause_index
                    .get(&c)
                    .expect("symmetry maps matrix clauses to matrix clauses");
                Step::Axiom { clause }
            }
            Step::Resolve { left, right, pivot } => Step::Resolve {
                left: img(*left),
                right: img(*right),
                pivot: sym.apply_lit(*pivot),
            },
            Step::Reduce { premise, lit } => Step::Reduce {
                premise: img(*premise),
                lit: sym.apply_lit(*lit),
            },
            Step::Symmetry { .. } => unreachable!("rewritten derivations are symmetry-free"),
        }
    }

    /// Id of the image of output step `root` under `syms[sym_idx]`.
    fn image(&mut self, root: usize, sym_idx: usize) -> usize {
        let sym = &self.syms[sym_idx];
        let mut stack = vec![(root, false)];
        while let Some((id, expanded)) = stack.pop() {
            if self.images.contains_key(&(id, sym_idx)) {
                continue;
            }
            if !expanded {
                stack.push((id, true));
                for p in self.out[id - 1].premises() {
                    if !self.images.contains_key(&(p, sym_idx)) {
                        stack.push((p, false));
                    }
                }
            } else {
                let mapped = self.map_step(&self.out[id - 1], sym, sym_idx);
                let new_id = self.push(mapped);
                self.images.insert((id, sym_idx), new_id);
            }
        }
        self.images[&(root, sym_idx)]
    }
}

/// Keeps only the steps `target` depends on, renumbered in order.
fn prune(steps: Vec<Step>, target: usize) -> Vec<Step> {
    let mut needed = vec![false; steps.len() + 1];
    needed[target] = true;
    for id in (1..=target).rev() {
        if needed[id] {
            for p in steps[id - 1].premises() {
                needed[p] = true;
            }
        }
    }
    let mut renumber = vec![0; steps.len() + 1];
    let mut out = Vec::new();
    for (i, step) in steps.into_iter().enumerate().take(target) {
        let id = i + 1;
        if !needed[id] {
            continue;
        }
        let r = |p: usize| renumber[p];
        let step = match step {
            Step::Axiom { clause } => Step::Axiom { clause },
            Step::Resolve { left, right, pivot } => Step::Resolve {
                left: r(left),
                right: r(right),
                pivot,
            },
            Step::Reduce { premise, lit } => Step::Reduce {
                premise: r(premise),
                lit,
            },
            Step::Symmetry { premise, sym } => Step::Symmetry {
                premise: r(premise),
                sym,
            },
        };
        out.push(step);
        renumber[id] = out.len();
    }
    out
}

/// Rewrites a Q-Res+S derivation into a Q-Res derivation of the same final
/// clause. Proofs without symmetry steps are returned unchanged.
///
/// The input must be a valid derivation under `allow_sym = true`; it need
/// not end in the empty clause.
pub fn eliminate_symmetry_steps(
    q: &Qbf,
    syms: &[Symmetry],
    pf: &Proof,
) -> Result<Proof, DesymError> {
    let report = check_proof(q, syms, pf, true);
    if !report.derivation_valid() {
        return Err(DesymError::InvalidInput {
            step: report.failing_step.unwrap_or(0),
            reason: report.reason.expect("reject carries a reason"),
        });
    }
    if pf.steps().iter().all(|s| s.kind() != StepKind::Symmetry) {
        return Ok(pf.clone());
    }

    let sym_index: HashMap<&str, usize> = syms
        .iter()
        .enumerate()
        .map(|(i, s)| (s.name(), i))
        .collect();
    let mut clause_index = HashMap::new();
    for (i, c) in q.matrix().iter().enumerate() {
        clause_index.entry(c).or_insert(i + 1);
    }
    let mut rw = Rewriter {
        q,
        syms,
        clause_index,
        out: Vec::new(),
        dedup: HashMap::new(),
        images: HashMap::new(),
    };

    let mut new_id = vec![0usize; pf.len() + 1];
    for (i, step) in pf.steps().iter().enumerate() {
        let mapped = match step {
            Step::Symmetry { premise, sym } => {
                rw.image(new_id[*premise], sym_index[sym.as_str()])
            }
            Step::Axiom { clause } => rw.push(Step::Axiom { clause: *clause }),
            Step::Resolve { left, right, pivot } => rw.push(Step::Resolve {
                left: new_id[*left],
                right: new_id[*right],
                pivot: *pivot,
            }),
            Step::Reduce { premise, lit } => rw.push(Step::Reduce {
                premise: new_id[*premise],
                lit: *lit,
            }),
        };
        new_id[i + 1] = mapped;
    }

    let target = new_id[pf.len()];
    let steps = prune(rw.out, target);
    Ok(Proof::new(pf.max_var(), steps).expect("rewritten steps are topologically ordered"))
}
