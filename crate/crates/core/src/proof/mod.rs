//! Fitch-style natural deduction for FDE+cmi and its extensions: the proof
//! file format, a per-step checker and a semantic soundness audit.

mod check;
mod format;

pub use check::{check_proof, soundness_audit, AuditError, AuditReport, CheckReport, StepDiagnostic, Violation};
pub use format::{parse_proof, Item, Proof, ProofError, Ref, RuleName, Step, Subproof, PROOF_LOGICS};
