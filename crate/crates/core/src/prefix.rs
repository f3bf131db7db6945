use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::lit::{Lit, Var};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Quantifier {
    Exists,
    Forall,
}

impl Quantifier {
    /// QDIMACS tag: `e` or `a`.
    pub fn tag(self) -> char {
        match self {
            Quantifier::Exists => 'e',
            Quantifier::Forall => 'a',
        }
    }
}

impl fmt::Display for Quantifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quantifier::Exists => "∃",
            Quantifier::Forall => "∀",
        })
    }
}

/// A maximal run of variables under the same quantifier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub quantifier: Quantifier,
    pub vars: Vec<Var>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrefixError {
    #[error("variable 0 in quantifier prefix")]
    ZeroVariable,
    #[error("variable {0} is quantified more than once")]
    DuplicateVariable(Var),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
struct Slot {
    block: u32,
    position: u32,
}

/// Quantifier prefix: ordered blocks, adjacent blocks alternating.
#[derive(Clone, Debug)]
pub struct Prefix {
    blocks: Vec<Block>,
    slots: Vec<Option<Slot>>,
    len: usize,
}

impl PartialEq for Prefix {
    fn eq(&self, other: &Prefix) -> bool {
        self.blocks == other.blocks
    }
}

impl Eq for Prefix {}

impl Prefix {
    /// Builds a prefix from quantifier runs in order. Adjacent runs with the
    /// same quantifier are merged and empty runs are dropped.
    pub fn new<I>(runs: I) -> Result<Prefix, PrefixError>
    where
        I: IntoIterator<Item = (Quantifier, Vec<Var>)>,
    {
        let mut blocks: Vec<Block> = Vec::new();
        for (quantifier, vars) in runs {
            if vars.is_empty() {
                continue;
            }
            match blocks.last_mut() {
                Some(last) if last.quantifier == quantifier => last.vars.extend(vars),
                _ => blocks.push(Block { quantifier, vars }),
            }
        }

        let max_var = blocks
            .iter()
            .flat_map(|b| b.vars.iter().copied())
            .max()
            .unwrap_or(0);
        let mut slots = vec![None; max_var as usize + 1];
        let mut position = 0u32;
        for (bi, block) in blocks.iter().enumerate() {
            for &v in &block.vars {
                if v == 0 {
                    return Err(PrefixError::ZeroVariable);
                }
                let slot = &mut slots[v as usize];
                if slot.is_some() {
                    return Err(PrefixError::DuplicateVariable(v));
                }
                *slot = Some(Slot {
                    block: bi as u32,
                    position,
                });
                position += 1;
            }
        }
        Ok(Prefix {
            blocks,
            slots,
            len: position as usize,
        })
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Number of quantified variables.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn max_var(&self) -> Var {
        self.slots.len().saturating_sub(1) as Var
    }

    /// Variables in prefix order.
    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.blocks.iter().flat_map(|b| b.vars.iter().copied())
    }

    fn slot(&self, var: Var) -> Option<Slot> {
        self.slots.get(var as usize).copied().flatten()
    }

    pub fn contains(&self, var: Var) -> bool {
        self.slot(var).is_some()
    }

    pub fn quantifier(&self, var: Var) -> Option<Quantifier> {
        self.slot(var)
            .map(|s| self.blocks[s.block as usize].quantifier)
    }

    pub fn is_existential(&self, var: Var) -> bool {
        self.quantifier(var) == Some(Quantifier::Exists)
    }

    pub fn is_universal(&self, var: Var) -> bool {
        self.quantifier(var) == Some(Quantifier::Forall)
    }

    /// Index of the block containing `var`.
    pub fn block_of(&self, var: Var) -> Option<usize> {
        self.slot(var).map(|s| s.block as usize)
    }

    /// Zero-based position of `var` in the flattened prefix.
    pub fn position(&self, var: Var) -> Option<usize> {
        self.slot(var).map(|s| s.position as usize)
    }

    /// The order `<_P`; `None` if either variable is unquantified.
    pub fn compare(&self, v: Var, w: Var) -> Option<Ordering> {
        Some(self.position(v)?.cmp(&self.position(w)?))
    }

    /// `v <_P w`.
    pub fn precedes(&self, v: Var, w: Var) -> bool {
        self.compare(v, w) == Some(Ordering::Less)
    }

    pub fn quantifier_of_lit(&self, lit: Lit) -> Option<Quantifier> {
        self.quantifier(lit.var())
    }
}

impl fmt::Display for Prefix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", b.quantifier)?;
            for (k, v) in b.vars.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Quantifier::*;

    fn kbkf1() -> Prefix {
        Prefix::new([(Exists, vec![1, 2]), (Forall, vec![3]), (Exists, vec![4])]).unwrap()
    }

    #[test]
    fn adjacent_runs_merge() {
        let p = Prefix::new([(Exists, vec![1]), (Exists, vec![2]), (Forall, vec![3])]).unwrap();
        assert_eq!(p.blocks().len(), 2);
        assert_eq!(p.blocks()[0].vars, vec![1, 2]);
        assert_eq!(p.block_of(2), Some(0));
    }

    #[test]
    fn duplicate_variable_rejected() {
        let err = Prefix::new([(Exists, vec![1, 2]), (Forall, vec![2])]).unwrap_err();
        assert_eq!(err, PrefixError::DuplicateVariable(2));
        assert_eq!(
            Prefix::new([(Exists, vec![0])]).unwrap_err(),
            PrefixError::ZeroVariable
        );
    }

    #[test]
    fn order_is_strict_and_total() {
        let p = kbkf1();
        let vars: Vec<Var> = p.vars().collect();
        for &v in &vars {
            assert!(!p.precedes(v, v));
            for &w in &vars {
                if v != w {
                    assert!(p.precedes(v, w) ^ p.precedes(w, v));
                }
            }
        }
        assert!(p.precedes(2, 3));
        assert!(p.is_universal(3));
        assert!(p.is_existential(4));
        assert_eq!(p.quantifier(5), None);
    }

    #[test]
    fn order_follows_listing_not_index() {
        let p = Prefix::new([(Forall, vec![5]), (Exists, vec![2])]).unwrap();
        assert!(p.precedes(5, 2));
        assert_eq!(p.max_var(), 5);
        assert_eq!(p.len(), 2);
    }
}
