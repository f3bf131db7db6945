//! Generators for the KBKF, QUPARITY and hardened KBKF formula families and
//! their documented symmetries.
//!
//! Variable numbering is fixed so that files and traces are reproducible:
//!
//! | family    | variables                                                        |
//! |-----------|------------------------------------------------------------------|
//! | KBKF      | `x_j = 3j-2`, `y_j = 3j-1`, `a_j = 3j`, `z_j = 3n+j`             |
//! | QUPARITY  | `x_j = j`, `a_1 = n+1`, `a_2 = n+2`, `y_j = n+1+j` (j ≥ 2)       |
//! | KBKF_HARD | `x_j = 4j-3`, `b_j = 4j-2`, `y_j = 4j-1`, `a_j = 4j`, `z_j = 4n+j` |

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::clause::Clause;
use crate::lit::{Lit, Var};
use crate::prefix::{Prefix, Quantifier};
use crate::qbf::Qbf;
use crate::symmetry::Symmetry;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Kbkf,
    Quparity,
    KbkfHard,
}

impl Family {
    pub fn min_n(self) -> usize {
        match self {
            Family::Quparity => 2,
            Family::Kbkf | Family::KbkfHard => 1,
        }
    }

    pub fn check_n(self, n: usize) -> Result<(), FamilyError> {
        if n < self.min_n() || i32::try_from(n.saturating_mul(5)).is_err() {
            return Err(FamilyError::OutOfRange { family: self, n });
        }
        Ok(())
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Kbkf => "kbkf",
            Family::Quparity => "quparity",
            Family::KbkfHard => "kbkf-hard",
        })
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Family, FamilyError> {
        match s {
            "kbkf" => Ok(Family::Kbkf),
            "quparity" => Ok(Family::Quparity),
            "kbkf-hard" => Ok(Family::KbkfHard),
            _ => Err(FamilyError::Unknown(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("n = {n} is out of range for {family}")]
    OutOfRange { family: Family, n: usize },
    #[error("unknown family `{0}`")]
    Unknown(String),
}

/// Variable numbering of KBKF_n (1-based `j`).
#[derive(Copy, Clone, Debug)]
pub struct KbkfVars {
    pub n: usize,
}

impl KbkfVars {
    pub fn x(&self, j: usize) -> Var {
        (3 * (j - 1) + 1) as Var
    }
    pub fn y(&self, j: usize) -> Var {
        (3 * (j - 1) + 2) as Var
    }
    pub fn a(&self, j: usize) -> Var {
        (3 * j) as Var
    }
    pub fn z(&self, j: usize) -> Var {
        (3 * self.n + j) as Var
    }
}

/// Variable numbering of QUPARITY_n.
#[derive(Copy, Clone, Debug)]
pub struct QuparityVars {
    pub n: usize,
}

impl QuparityVars {
    pub fn x(&self, j: usize) -> Var {
        j as Var
    }
    pub fn a1(&self) -> Var {
        (self.n + 1) as Var
    }
    pub fn a2(&self) -> Var {
        (self.n + 2) as Var
    }
    /// Defined for `2 <= j <= n`.
    pub fn y(&self, j: usize) -> Var {
        (self.n + 1 + j) as Var
    }
}

/// Variable numbering of the hardened KBKF_n.
#[derive(Copy, Clone, Debug)]
pub struct KbkfHardVars {
    pub n: usize,
}

impl KbkfHardVars {
    pub fn x(&self, j: usize) -> Var {
        (4 * (j - 1) + 1) as Var
    }
    pub fn b(&self, j: usize) -> Var {
        (4 * (j - 1) + 2) as Var
    }
    pub fn y(&self, j: usize) -> Var {
        (4 * (j - 1) + 3) as Var
    }
    pub fn a(&self, j: usize) -> Var {
        (4 * j) as Var
    }
    pub fn z(&self, j: usize) -> Var {
        (4 * self.n + j) as Var
    }
}

/// 1-based matrix positions of the KBKF clauses `C_k` and `B_k`.
pub mod kbkf_index {
    /// `C_k`, `1 <= k <= 2n+1`.
    pub fn c(k: usize) -> usize {
        k
    }
    /// `B_k`, `1 <= k <= 2n`.
    pub fn b(n: usize, k: usize) -> usize {
        2 * n + 1 + k
    }
    /// Breaker clause `(¬x_j ∨ y_j)` appended after the matrix.
    pub fn breaker(n: usize, j: usize) -> usize {
        4 * n + 1 + j
    }
}

/// 1-based matrix positions of the QUPARITY clauses.
pub mod quparity_index {
    /// Letter offsets for `A_j, B_j, C_j, D_j`.
    pub const A: usize = 0;
    pub const B: usize = 1;
    pub const C: usize = 2;
    pub const D: usize = 3;

    /// Unprimed group clause, `2 <= j <= n`.
    pub fn group(j: usize, letter: usize) -> usize {
        4 * (j - 2) + letter + 1
    }
    pub fn e1(n: usize) -> usize {
        4 * (n - 1) + 1
    }
    pub fn e2(n: usize) -> usize {
        4 * (n - 1) + 2
    }
    /// Primed group clause, `2 <= j <= n`.
    pub fn primed(n: usize, j: usize, letter: usize) -> usize {
        4 * (n - 1) + 2 + group(j, letter)
    }
    /// Breaker clause `k` (1-based) of `(¬x_1 ∨ x_2), ¬x_2, ..., ¬x_n`.
    pub fn breaker(n: usize, k: usize) -> usize {
        8 * (n - 1) + 2 + k
    }
}

fn lit(var: Var, positive: bool) -> Lit {
    Lit::new(var, positive)
}

fn kbkf_matrix(n: usize, x: impl Fn(usize) -> Var, y: impl Fn(usize) -> Var, a: impl Fn(usize) -> Var, z: impl Fn(usize) -> Var) -> Vec<Clause> {
    let mut m = Vec::with_capacity(4 * n + 1);
    m.push(Clause::new([lit(x(1), false), lit(y(1), false)]));
    for j in 1..n {
        let tail = [lit(x(j + 1), false), lit(y(j + 1), false)];
        m.push(Clause::new([lit(x(j), true), lit(a(j), false)].into_iter().chain(tail)));
        m.push(Clause::new([lit(y(j), true), lit(a(j), true)].into_iter().chain(tail)));
    }
    let zs: Vec<Lit> = (1..=n).map(|i| lit(z(i), false)).collect();
    m.push(Clause::new(
        [lit(x(n), true), lit(a(n), false)].into_iter().chain(zs.iter().copied()),
    ));
    m.push(Clause::new(
        [lit(y(n), true), lit(a(n), true)].into_iter().chain(zs.iter().copied()),
    ));
    for j in 1..=n {
        m.push(Clause::new([lit(a(j), true), lit(z(j), true)]));
        m.push(Clause::new([lit(a(j), false), lit(z(j), true)]));
    }
    m
}

fn kbkf(n: usize) -> Qbf {
    let v = KbkfVars { n };
    let mut runs = Vec::new();
    for j in 1..=n {
        runs.push((Quantifier::Exists, vec![v.x(j), v.y(j)]));
        runs.push((Quantifier::Forall, vec![v.a(j)]));
    }
    runs.push((Quantifier::Exists, (1..=n).map(|j| v.z(j)).collect()));
    let prefix = Prefix::new(runs).expect("valid prefix");
    let matrix = kbkf_matrix(n, |j| v.x(j), |j| v.y(j), |j| v.a(j), |j| v.z(j));
    Qbf::new(prefix, matrix).expect("closed formula")
}

fn kbkf_hard(n: usize) -> Qbf {
    let v = KbkfHardVars { n };
    let mut runs = Vec::new();
    for j in 1..=n {
        runs.push((Quantifier::Exists, vec![v.x(j)]));
        runs.push((Quantifier::Forall, vec![v.b(j)]));
        runs.push((Quantifier::Exists, vec![v.y(j)]));
        runs.push((Quantifier::Forall, vec![v.a(j)]));
    }
    runs.push((Quantifier::Exists, (1..=n).map(|j| v.z(j)).collect()));
    let prefix = Prefix::new(runs).expect("valid prefix");
    let mut matrix = kbkf_matrix(n, |j| v.x(j), |j| v.y(j), |j| v.a(j), |j| v.z(j));
    // C_2j gains b_j; C_2j sits at matrix position 2j.
    for j in 1..=n {
        let c = &mut matrix[2 * j - 1];
        *c = Clause::new(c.iter().chain([lit(v.b(j), true)]));
    }
    Qbf::new(prefix, matrix).expect("closed formula")
}

fn quparity(n: usize) -> Qbf {
    let v = QuparityVars { n };
    let prefix = Prefix::new([
        (Quantifier::Exists, (1..=n).map(|j| v.x(j)).collect()),
        (Quantifier::Forall, vec![v.a1(), v.a2()]),
        (Quantifier::Exists, (2..=n).map(|j| v.y(j)).collect()),
    ])
    .expect("valid prefix");

    // Polarities of (left, x_j, y_j) for A, B, C, D; `left` is x_1 for j = 2
    // and y_{j-1} otherwise.
    const SIGNS: [(bool, bool, bool); 4] = [
        (false, false, false),
        (false, true, true),
        (true, false, true),
        (true, true, false),
    ];
    let groups = |universal: bool| -> Vec<Clause> {
        let mut out = Vec::with_capacity(4 * (n - 1));
        for j in 2..=n {
            let left = if j == 2 { v.x(1) } else { v.y(j - 1) };
            for &(sl, sx, sy) in &SIGNS {
                out.push(Clause::new([
                    lit(left, sl),
                    lit(v.x(j), sx),
                    lit(v.y(j), sy),
                    lit(v.a1(), universal),
                    lit(v.a2(), universal),
                ]));
            }
        }
        out
    };
    let mut matrix = groups(true);
    matrix.push(Clause::new([lit(v.a1(), true), lit(v.a2(), true), lit(v.y(n), true)]));
    matrix.push(Clause::new([lit(v.a1(), false), lit(v.a2(), false), lit(v.y(n), false)]));
    matrix.extend(groups(false));
    Qbf::new(prefix, matrix).expect("closed formula")
}

pub fn gen_family(family: Family, n: usize) -> Result<Qbf, FamilyError> {
    family.check_n(n)?;
    Ok(match family {
        Family::Kbkf => kbkf(n),
        Family::Quparity => quparity(n),
        Family::KbkfHard => kbkf_hard(n),
    })
}

/// Symmetry names used in sidecar files and traces.
pub fn sigma_name(i: usize) -> String {
    format!("sigma{i}")
}

/// The symmetries `σ_1, ..., σ_n` of the family. Empty for the hardened
/// variant, where the KBKF swaps cross quantifier blocks.
pub fn family_symmetries(family: Family, n: usize) -> Result<Vec<Symmetry>, FamilyError> {
    family.check_n(n)?;
    let syms = match family {
        Family::Kbkf => {
            let v = KbkfVars { n };
            (1..=n)
                .map(|i| {
                    Symmetry::new(
                        sigma_name(i),
                        [
                            (v.x(i), Lit::pos(v.y(i))),
                            (v.y(i), Lit::pos(v.x(i))),
                            (v.a(i), Lit::neg(v.a(i))),
                        ],
                    )
                    .expect("bijective")
                })
                .collect()
        }
        Family::Quparity => {
            let v = QuparityVars { n };
            let mut out = vec![Symmetry::new(
                sigma_name(1),
                [(v.x(1), Lit::pos(v.x(2))), (v.x(2), Lit::pos(v.x(1)))],
            )
            .expect("bijective")];
            for i in 2..=n {
                let flipped = [v.x(i), v.a1(), v.a2()]
                    .into_iter()
                    .chain((i..=n).map(|k| v.y(k)));
                out.push(
                    Symmetry::new(sigma_name(i), flipped.map(|w| (w, Lit::neg(w))))
                        .expect("bijective"),
                );
            }
            out
        }
        Family::KbkfHard => Vec::new(),
    };
    Ok(syms)
}

/// The KBKF symmetries `σ_i = (x_i y_i)(a_i ā_i)` transplanted onto the
/// hardened variable numbering. They are not admissible there.
pub fn kbkf_symmetries_on_hard(n: usize) -> Result<Vec<Symmetry>, FamilyError> {
    Family::KbkfHard.check_n(n)?;
    let v = KbkfHardVars { n };
    Ok((1..=n)
        .map(|i| {
            Symmetry::new(
                sigma_name(i),
                [
                    (v.x(i), Lit::pos(v.y(i))),
                    (v.y(i), Lit::pos(v.x(i))),
                    (v.a(i), Lit::neg(v.a(i))),
                ],
            )
            .expect("bijective")
        })
        .collect())
}
