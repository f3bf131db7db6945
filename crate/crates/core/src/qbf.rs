use thiserror::Error;

use crate::clause::Clause;
use crate::lit::Var;
use crate::prefix::Prefix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QbfError {
    #[error("variable {var} in clause {clause} is not quantified")]
    Unquantified { var: Var, clause: usize },
    #[error("declared variable count {declared} is below the largest variable {max}")]
    VarCountTooSmall { declared: Var, max: Var },
}

/// A closed prenex QBF with a CNF matrix.
///
/// Matrix order is significant: axiom steps refer to clauses by 1-based
/// position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Qbf {
    num_vars: Var,
    prefix: Prefix,
    matrix: Vec<Clause>,
}

impl Qbf {
    pub fn new(prefix: Prefix, matrix: Vec<Clause>) -> Result<Qbf, QbfError> {
        let num_vars = prefix.max_var();
        Qbf::with_num_vars(num_vars, prefix, matrix)
    }

    /// Like [`Qbf::new`] but with an explicit header variable count, which may
    /// exceed the largest quantified variable.
    pub fn with_num_vars(
        num_vars: Var,
        prefix: Prefix,
        matrix: Vec<Clause>,
    ) -> Result<Qbf, QbfError> {
        if num_vars < prefix.max_var() {
            return Err(QbfError::VarCountTooSmall {
                declared: num_vars,
                max: prefix.max_var(),
            });
        }
        for (i, c) in matrix.iter().enumerate() {
            if let Some(l) = c.iter().find(|l| !prefix.contains(l.var())) {
                return Err(QbfError::Unquantified {
                    var: l.var(),
                    clause: i + 1,
                });
            }
        }
        Ok(Qbf {
            num_vars,
            prefix,
            matrix,
        })
    }

    pub fn num_vars(&self) -> Var {
        self.num_vars
    }

    pub fn prefix(&self) -> &Prefix {
        &self.prefix
    }

    pub fn matrix(&self) -> &[Clause] {
        &self.matrix
    }

    /// Matrix clause by 1-based index.
    pub fn clause(&self, index: usize) -> Option<&Clause> {
        index.checked_sub(1).and_then(|i| self.matrix.get(i))
    }

    /// Returns a copy with `extra` appended to the matrix.
    pub fn with_clauses<I: IntoIterator<Item = Clause>>(&self, extra: I) -> Result<Qbf, QbfError> {
        let mut matrix = self.matrix.clone();
        matrix.extend(extra);
        Qbf::with_num_vars(self.num_vars, self.prefix.clone(), matrix)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prefix::Quantifier::*;

    #[test]
    fn matrix_variables_must_be_quantified() {
        let p = Prefix::new([(Exists, vec![1])]).unwrap();
        let err = Qbf::new(p.clone(), vec![Clause::from_dimacs(&[1, 2])]).unwrap_err();
        assert_eq!(err, QbfError::Unquantified { var: 2, clause: 1 });
        let q = Qbf::new(p, vec![Clause::from_dimacs(&[-1])]).unwrap();
        assert_eq!(q.clause(1), Some(&Clause::from_dimacs(&[-1])));
        assert_eq!(q.clause(0), None);
        assert_eq!(q.clause(2), None);
    }
}
