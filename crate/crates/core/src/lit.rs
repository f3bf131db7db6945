use std::cmp::Ordering;
use std::fmt;
use std::num::NonZeroI32;
use std::ops::Not;

/// Index of a propositional variable. Variables are numbered from 1.
pub type Var = u32;

/// A literal in DIMACS encoding: `v` is the variable, `-v` its negation.
#[derive(Copy, Clone, PartialEq, Eq, Hash)]
pub struct Lit(NonZeroI32);

impl Lit {
    /// Builds a literal from its DIMACS integer; `None` for 0.
    pub fn from_dimacs(value: i32) -> Option<Lit> {
        NonZeroI32::new(value).map(Lit)
    }

    /// Positive or negative literal of `var`.
    ///
    /// Panics if `var` is 0 or does not fit a DIMACS integer.
    pub fn new(var: Var, positive: bool) -> Lit {
        let v = i32::try_from(var).expect("variable index out of range");
        let value = if positive { v } else { -v };
        Lit(NonZeroI32::new(value).expect("variable index 0"))
    }

    pub fn pos(var: Var) -> Lit {
        Lit::new(var, true)
    }

    pub fn neg(var: Var) -> Lit {
        Lit::new(var, false)
    }

    pub fn to_dimacs(self) -> i32 {
        self.0.get()
    }

    pub fn var(self) -> Var {
        self.0.get().unsigned_abs()
    }

    pub fn is_positive(self) -> bool {
        self.0.get() > 0
    }

    pub fn is_negative(self) -> bool {
        self.0.get() < 0
    }
}

impl Not for Lit {
    type Output = Lit;

    fn not(self) -> Lit {
        Lit(-self.0)
    }
}

/// Literals are ordered by variable, the negative literal first.
impl Ord for Lit {
    fn cmp(&self, other: &Lit) -> Ordering {
        self.var()
            .cmp(&other.var())
            .then(self.is_positive().cmp(&other.is_positive()))
    }
}

impl PartialOrd for Lit {
    fn partial_cmp(&self, other: &Lit) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
