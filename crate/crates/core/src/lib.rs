//! Proof engineering for quantified Boolean formulas.
//!
//! The crate generates the KBKF and QUPARITY formula families (plus a
//! hardened KBKF variant), synthesizes clausal symmetry breakers from their
//! symmetries, emits linear-size refutations in Q-Res and in Q-Res extended
//! with a symmetry rule, and checks all of it with an independent proof
//! checker and a brute-force evaluator.

pub mod breaker;
pub mod calculus;
pub mod clause;
pub mod families;
pub mod lit;
pub mod oracle;
pub mod prefix;
pub mod qbf;
pub mod qdimacs;
pub mod short_proofs;
pub mod symmetry;

pub use breaker::{breaker_clauses, BreakerError};
pub use calculus::{
    check_proof, eliminate_symmetry_steps, parse_trace, serialize_trace, CheckReport, Proof,
    RejectReason, Step, Verdict,
};
pub use clause::Clause;
pub use families::{family_symmetries, gen_family, Family, FamilyError};
pub use lit::{Lit, Var};
pub use oracle::{evaluate, Evaluator, OracleError};
pub use prefix::{Prefix, Quantifier};
pub use qbf::Qbf;
pub use qdimacs::{parse_qdimacs, serialize_qdimacs, ParseError};
pub use short_proofs::{
    prove, prove_kbkf_breaker, prove_kbkf_sym, prove_quparity_breaker, prove_quparity_sym,
    ShortProof, Strategy,
};
pub use symmetry::{parse_symmetries, serialize_symmetries, Symmetry, SymmetryError};
