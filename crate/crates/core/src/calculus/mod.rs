//! Q-Res extended with the symmetry rule: inference rules, proofs, the trace
//! format, the checker and symmetry-step elimination.

mod check;
mod desym;
mod proof;
mod rules;
mod trace;

pub use check::{check_proof, CheckReport, RejectReason, Verdict};
pub use desym::{eliminate_symmetry_steps, DesymError};
pub use proof::{Proof, ProofBuilder, ProofError, Step, StepCounts, StepKind};
pub use rules::{reduce, resolve, RuleError};
pub use trace::{parse_trace, serialize_trace, TraceError};
