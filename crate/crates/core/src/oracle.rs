//! Brute-force QBF evaluation by game semantics.
//!
//! The evaluator walks the prefix in order, taking the disjunction of both
//! branches for an existential variable and the conjunction for a universal
//! one. A branch is cut as soon as some clause is falsified or every clause
//! is satisfied. There is no learning; the point is to be obviously right.

use thiserror::Error;

use crate::lit::{Lit, Var};
use crate::prefix::Quantifier;
use crate::qbf::Qbf;

pub const DEFAULT_MAX_VARS: usize = 24;

/// Below this many variables the outermost split is not worth a thread.
const PARALLEL_THRESHOLD: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("formula has {count} variables, above the limit of {limit}")]
    TooManyVariables { count: usize, limit: usize },
}

/// Partial assignment indexed by variable.
#[derive(Clone, Debug)]
pub struct Assignment {
    values: Vec<Option<bool>>,
}

impl Assignment {
    pub fn new(max_var: Var) -> Assignment {
        Assignment {
            values: vec![None; max_var as usize + 1],
        }
    }

    pub fn get(&self, var: Var) -> Option<bool> {
        self.values.get(var as usize).copied().flatten()
    }

    pub fn set(&mut self, var: Var, value: Option<bool>) {
        self.values[var as usize] = value;
    }

    /// Truth value of `lit`, if its variable is assigned.
    pub fn lit_value(&self, lit: Lit) -> Option<bool> {
        self.get(lit.var()).map(|v| v == lit.is_positive())
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
enum MatrixState {
    Satisfied,
    Falsified,
    Open,
}

#[derive(Copy, Clone, Debug)]
pub struct Evaluator {
    pub max_vars: usize,
}

impl Default for Evaluator {
    fn default() -> Evaluator {
        Evaluator {
            max_vars: DEFAULT_MAX_VARS,
        }
    }
}

impl Evaluator {
    pub fn new(max_vars: usize) -> Evaluator {
        Evaluator { max_vars }
    }

    pub fn evaluate(&self, q: &Qbf) -> Result<bool, OracleError> {
        let count = q.prefix().len();
        if count > self.max_vars {
            return Err(OracleError::TooManyVariables {
                count,
                limit: self.max_vars,
            });
        }
        let order: Vec<(Var, Quantifier)> = q
            .prefix()
            .blocks()
            .iter()
            .flat_map(|b| b.vars.iter().map(move |&v| (v, b.quantifier)))
            .collect();
        let search = Search { q, order: &order };
        let mut assignment = Assignment::new(q.num_vars());

        if order.len() < PARALLEL_THRESHOLD {
            return Ok(search.run(0, &mut assignment));
        }
        let (var, quantifier) = order[0];
        let (left, right) = std::thread::scope(|s| {
            let branch = |value: bool| {
                let search = &search;
                let mut a = assignment.clone();
                move || {
                    a.set(var, Some(value));
                    search.run(1, &mut a)
                }
            };
            let t = s.spawn(branch(true));
            let f = branch(false)();
            (t.join().expect("oracle thread panicked"), f)
        });
        Ok(match quantifier {
            Quantifier::Exists => left || right,
            Quantifier::Forall => left && right,
        })
    }
}

struct Search<'a> {
    q: &'a Qbf,
    order: &'a [(Var, Quantifier)],
}

impl Search<'_> {
    fn state(&self, a: &Assignment) -> MatrixState {
        let mut all_satisfied = true;
        for clause in self.q.matrix() {
            let mut satisfied = false;
            let mut open = false;
            for l in clause.iter() {
                match a.lit_value(l) {
                    Some(true) => {
                        satisfied = true;
                        break;
                    }
                    None => open = true,
                    Some(false) => {}
                }
            }
            if !satisfied {
                if !open {
                    return MatrixState::Falsified;
                }
                all_satisfied = false;
            }
        }
        if all_satisfied {
            MatrixState::Satisfied
        } else {
            MatrixState::Open
        }
    }

    fn run(&self, depth: usize, a: &mut Assignment) -> bool {
        match self.state(a) {
            MatrixState::Satisfied => return true,
            MatrixState::Falsified => return false,
            MatrixState::Open => {}
        }
        // An open clause has an unassigned literal, so depth < order.len().
        let (var, quantifier) = self.order[depth];
        let mut result = quantifier == Quantifier::Forall;
        for value in [false, true] {
            a.set(var, Some(value));
            let sub = self.run(depth + 1, a);
            let decided = match quantifier {
                Quantifier::Exists => sub,
                Quantifier::Forall => !sub,
            };
            if decided {
                result = sub;
                break;
            }
        }
        a.set(var, None);
        result
    }
}

/// Evaluates with the default variable limit.
pub fn evaluate(q: &Qbf) -> Result<bool, OracleError> {
    Evaluator::default().evaluate(q)
}
