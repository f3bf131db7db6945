//! Random clause pairs over the family prefixes, shared by the property
//! tests and the acceptance harness.

#![allow(dead_code)]

use std::mem::discriminant;

use proptest::prelude::*;
use proptest::sample::Index;
use symqres::calculus::{reduce, resolve};
use symqres::{family_symmetries, gen_family, Clause, Family, Lit, Qbf, Symmetry};

#[derive(Clone, Debug)]
pub struct RuleCase {
    pub q: Qbf,
    pub sym: Symmetry,
    pub c1: Clause,
    pub c2: Clause,
    pub pivot: Lit,
    pub red: Lit,
}

fn pick_lits(q: &Qbf, seeds: &[(Index, bool)]) -> Vec<Lit> {
    let nv = q.num_vars() as usize;
    seeds
        .iter()
        .map(|(i, pos)| Lit::new(i.index(nv) as u32 + 1, *pos))
        .collect()
}

pub fn rule_case() -> impl Strategy<Value = RuleCase> {
    let lits = || prop::collection::vec((any::<Index>(), any::<bool>()), 0..6);
    (
        any::<bool>(),
        1usize..=4,
        any::<Index>(),
        lits(),
        lits(),
        (any::<Index>(), any::<bool>()),
        any::<Index>(),
    )
        .prop_map(|(kbkf, n, si, l1, l2, pivot, ri)| {
            let (family, n) = if kbkf {
                (Family::Kbkf, n)
            } else {
                (Family::Quparity, n + 1)
            };
            let q = gen_family(family, n).unwrap();
            let syms = family_symmetries(family, n).unwrap();
            let sym = syms[si.index(syms.len())].clone();
            let pivot = pick_lits(&q, &[pivot])[0];
            let c1 = Clause::new(pick_lits(&q, &l1).into_iter().chain([pivot]));
            let c2 = Clause::new(pick_lits(&q, &l2).into_iter().chain([!pivot]));
            let red = c1.lits()[ri.index(c1.len())];
            RuleCase {
                q,
                sym,
                c1,
                c2,
                pivot,
                red,
            }
        })
}

fn same_outcome<E>(a: &Result<Clause, E>, b: &Result<Clause, E>) -> bool {
    match (a, b) {
        (Ok(x), Ok(y)) => x == y,
        (Err(x), Err(y)) => discriminant(x) == discriminant(y),
        _ => false,
    }
}

/// Applying the symmetry before or after resolution and reduction gives the
/// same clause, and failures fail for the same reason.
pub fn commutes(case: &RuleCase) -> Result<(), TestCaseError> {
    let RuleCase {
        q,
        sym,
        c1,
        c2,
        pivot,
        red,
    } = case;
    let p = q.prefix();
    let s = |c: &Clause| sym.apply_to_clause(c);

    let after = resolve(c1, c2, *pivot, p).map(|c| s(&c));
    let before = resolve(&s(c1), &s(c2), sym.apply_lit(*pivot), p);
    prop_assert!(same_outcome(&after, &before), "resolve: {after:?} vs {before:?}");

    let after = reduce(c1, *red, p).map(|c| s(&c));
    let before = reduce(&s(c1), sym.apply_lit(*red), p);
    prop_assert!(same_outcome(&after, &before), "reduce: {after:?} vs {before:?}");
    Ok(())
}
