//! Linear-size refutations of the KBKF and QUPARITY families, either after
//! conjoining the symmetry breaker (plain Q-Res) or on the original formula
//! using the symmetry rule.
//!
//! Rule-step counts (axioms excluded) are `4n`, `2n+1`, `5n` and `3n+2`.

use crate::breaker::breaker_clauses_unchecked;
use crate::calculus::{Proof, ProofBuilder};
use crate::families::{
    family_symmetries, gen_family, kbkf_index as kix, quparity_index as qix, sigma_name, Family,
    FamilyError, KbkfVars, QuparityVars,
};
use crate::lit::Lit;
use crate::qbf::Qbf;
use crate::symmetry::Symmetry;

/// A generated refutation together with the formula it refutes and the
/// symmetries its symmetry steps refer to.
#[derive(Clone, Debug)]
pub struct ShortProof {
    pub formula: Qbf,
    pub symmetries: Vec<Symmetry>,
    pub proof: Proof,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Strategy {
    Breaker,
    SymRule,
}

fn with_breaker(family: Family, n: usize) -> Result<Qbf, FamilyError> {
    let q = gen_family(family, n)?;
    let syms = family_symmetries(family, n)?;
    let psi = breaker_clauses_unchecked(&q, &syms).expect("family symmetries yield clausal breakers");
    Ok(q.with_clauses(psi).expect("breaker uses formula variables"))
}

/// Refutation of KBKF_n conjoined with `(¬x_1 ∨ y_1) ∧ … ∧ (¬x_n ∨ y_n)`.
pub fn prove_kbkf_breaker(n: usize) -> Result<ShortProof, FamilyError> {
    let formula = with_breaker(Family::Kbkf, n)?;
    let v = KbkfVars { n };
    let mut b = ProofBuilder::new(formula.num_vars());

    // U_0 = ¬x_1
    let c1 = b.axiom(kix::c(1));
    let psi1 = b.axiom(kix::breaker(n, 1));
    let mut u = b.resolve(c1, psi1, Lit::neg(v.y(1)));
    for j in 1..n {
        // Ũ_j = ¬a_1 … ¬a_j ∨ ¬x_{j+1} ∨ ¬y_{j+1}
        let c = b.axiom(kix::c(2 * j));
        let ut = b.resolve(c, u, Lit::pos(v.x(j)));
        // U_j = ¬a_1 … ¬a_j ∨ ¬x_{j+1}
        let psi = b.axiom(kix::breaker(n, j + 1));
        u = b.resolve(ut, psi, Lit::neg(v.y(j + 1)));
    }
    // V_0 = ¬a_1 … ¬a_n ∨ ¬z_1 … ¬z_n
    let c = b.axiom(kix::c(2 * n));
    let mut w = b.resolve(c, u, Lit::pos(v.x(n)));
    for j in 1..=n {
        let bb = b.axiom(kix::b(n, 2 * j));
        w = b.resolve(w, bb, Lit::neg(v.z(j)));
    }
    // W_0 = V_n = ¬a_1 … ¬a_n, reduced away from the left
    for j in 1..=n {
        w = b.reduce(w, Lit::neg(v.a(j)));
    }
    Ok(ShortProof {
        formula,
        symmetries: Vec::new(),
        proof: b.finish(),
    })
}

/// Refutation of QUPARITY_n conjoined with `(¬x_1 ∨ x_2) ∧ ¬x_2 ∧ … ∧ ¬x_n`.
pub fn prove_quparity_breaker(n: usize) -> Result<ShortProof, FamilyError> {
    let formula = with_breaker(Family::Quparity, n)?;
    let v = QuparityVars { n };
    let mut b = ProofBuilder::new(formula.num_vars());
    let neg_x = |j: usize| qix::breaker(n, j);

    // U_1 = x_2 ∨ ¬y_2 ∨ a_1 ∨ a_2
    let d2 = b.axiom(qix::group(2, qix::D));
    let psi1 = b.axiom(qix::breaker(n, 1));
    let u1 = b.resolve(d2, psi1, Lit::pos(v.x(1)));
    // U_2 = ¬y_2 ∨ a_1 ∨ a_2
    let nx2 = b.axiom(neg_x(2));
    let mut u = b.resolve(u1, nx2, Lit::pos(v.x(2)));
    // D̃_j = y_{j-1} ∨ ¬y_j ∨ a_1 ∨ a_2
    let mut dt = Vec::with_capacity(n.saturating_sub(2));
    for j in 3..=n {
        let d = b.axiom(qix::group(j, qix::D));
        let nx = b.axiom(neg_x(j));
        dt.push(b.resolve(d, nx, Lit::pos(v.x(j))));
    }
    // U_j = ¬y_j ∨ a_1 ∨ a_2
    for (k, j) in (3..=n).enumerate() {
        u = b.resolve(u, dt[k], Lit::neg(v.y(j - 1)));
    }
    let e1 = b.axiom(qix::e1(n));
    let aa = b.resolve(u, e1, Lit::neg(v.y(n)));
    let a2 = b.reduce(aa, Lit::pos(v.a1()));
    b.reduce(a2, Lit::pos(v.a2()));
    Ok(ShortProof {
        formula,
        symmetries: Vec::new(),
        proof: b.finish(),
    })
}

/// Q-Res+S refutation of KBKF_n with `σ_j = (x_j y_j)(a_j ¬a_j)`.
///
/// The middle resolution of each round resolves `V_j' = x_j ∨ a_1 … a_{j-1}`
/// with `C_{2j-1}` on `x_j`, giving `y_{j-1} ∨ ¬y_j ∨ a_1 … a_{j-1}`, and then
/// with `V_j` on `y_j`.
pub fn prove_kbkf_sym(n: usize) -> Result<ShortProof, FamilyError> {
    let formula = gen_family(Family::Kbkf, n)?;
    let symmetries = family_symmetries(Family::Kbkf, n)?;
    let v = KbkfVars { n };
    let mut b = ProofBuilder::new(formula.num_vars());

    // U_{n+1} = C_{2n+1}; U_j = y_n ∨ a_j … a_n ∨ ¬z_1 … ¬z_{j-1}
    let mut w = b.axiom(kix::c(2 * n + 1));
    for j in (1..=n).rev() {
        let bb = b.axiom(kix::b(n, 2 * j - 1));
        w = b.resolve(w, bb, Lit::neg(v.z(j)));
    }
    // W_j = y_j ∨ a_1 … a_j
    for j in (2..=n).rev() {
        let vj = b.reduce(w, Lit::pos(v.a(j)));
        let vj1 = b.symmetry(vj, sigma_name(j));
        let c = b.axiom(kix::c(2 * j - 1));
        let vj2 = b.resolve(vj1, c, Lit::pos(v.x(j)));
        w = b.resolve(vj2, vj, Lit::neg(v.y(j)));
    }
    let v1 = b.reduce(w, Lit::pos(v.a(1)));
    let v1p = b.symmetry(v1, sigma_name(1));
    let c1 = b.axiom(kix::c(1));
    let v1pp = b.resolve(v1p, c1, Lit::pos(v.x(1)));
    b.resolve(v1pp, v1, Lit::neg(v.y(1)));
    Ok(ShortProof {
        formula,
        symmetries,
        proof: b.finish(),
    })
}

/// Q-Res+S refutation of QUPARITY_n with `σ_1 = (x_1 x_2)` and
/// `σ_i = (x_i ¬x_i)(a_1 ¬a_1)(a_2 ¬a_2)(y_i ¬y_i)…(y_n ¬y_n)`.
pub fn prove_quparity_sym(n: usize) -> Result<ShortProof, FamilyError> {
    let formula = gen_family(Family::Quparity, n)?;
    let symmetries = family_symmetries(Family::Quparity, n)?;
    let v = QuparityVars { n };
    let mut b = ProofBuilder::new(formula.num_vars());

    // U_n = y_{n-1} ∨ x_n ∨ a_1 ∨ a_2 (x_1 ∨ x_2 ∨ a_1 ∨ a_2 when n = 2)
    let dn = b.axiom(qix::group(n, qix::D));
    let e1 = b.axiom(qix::e1(n));
    let mut u = b.resolve(dn, e1, Lit::neg(v.y(n)));
    // U_j = y_{j-1} ∨ x_j … x_n ∨ a_1 ∨ a_2, down to U_2 = x_1 … x_n ∨ a_1 ∨ a_2
    for j in (2..n).rev() {
        let d = b.axiom(qix::group(j, qix::D));
        u = b.resolve(d, u, Lit::neg(v.y(j)));
    }
    let u = b.reduce(u, Lit::pos(v.a2()));
    // V_n = x_1 ∨ … ∨ x_n
    let mut vj = b.reduce(u, Lit::pos(v.a1()));
    for j in (2..=n).rev() {
        // W_j = x_1 … x_{j-1} ∨ ¬x_j
        let wj = b.symmetry(vj, sigma_name(j));
        vj = b.resolve(vj, wj, Lit::pos(v.x(j)));
    }
    let w1 = b.symmetry(vj, sigma_name(1));
    let w2 = b.symmetry(w1, sigma_name(2));
    b.resolve(w1, w2, Lit::pos(v.x(2)));
    Ok(ShortProof {
        formula,
        symmetries,
        proof: b.finish(),
    })
}

/// Dispatches to one of the four generators. Only KBKF and QUPARITY have
/// short proofs.
pub fn prove(family: Family, n: usize, strategy: Strategy) -> Result<ShortProof, FamilyError> {
    match (family, strategy) {
        (Family::Kbkf, Strategy::Breaker) => prove_kbkf_breaker(n),
        (Family::Kbkf, Strategy::SymRule) => prove_kbkf_sym(n),
        (Family::Quparity, Strategy::Breaker) => prove_quparity_breaker(n),
        (Family::Quparity, Strategy::SymRule) => prove_quparity_sym(n),
        (Family::KbkfHard, _) => Err(FamilyError::Unknown(
            "kbkf-hard has no short proof generator".into(),
        )),
    }
}
