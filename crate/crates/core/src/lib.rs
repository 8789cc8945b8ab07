//! A kernel for the FDE family of many-valued propositional logics.
//!
//! The four Belnap–Dunn values `T`, `B`, `N`, `F` form a De Morgan lattice.
//! On top of it the crate registers FDE, K3, LP and M, their extensions by
//! the classical-material conditional (`+cmi`), Łukasiewicz's L3, RM3 and
//! classical logic, and provides:
//!
//! * [`syntax`]: formulas, the text grammar, rendering and substitution;
//! * [`semantics`]: truth values, logics, valuations and evaluation,
//!   including quantifiers over truth values;
//! * [`consequence`]: validity, entailment, countermodels, truth tables;
//! * [`interop`]: defined connectives and constants, translations between
//!   logics and synonymy checks;
//! * [`synthesis`]: formulas realising arbitrary four-valued truth functions;
//! * [`proof`]: a Fitch-style natural deduction checker with a semantic audit;
//! * [`pool`]: exhaustive and seeded-random formula generation.

pub mod consequence;
pub mod interop;
pub mod pool;
pub mod proof;
pub mod semantics;
pub mod syntax;
pub mod synthesis;

pub use consequence::{
    countermodel, countermodels, entails, equivalent, equivalent_across, truth_table, valid, Sequent, TruthTable,
};
pub use interop::{
    block_closure_values, check_synonymy, constant_check, expand, translate, DefinitionSet, SynonymPair,
    SynonymyReport, TranslationScheme,
};
pub use proof::{check_proof, parse_proof, soundness_audit, CheckReport, Proof};
pub use semantics::{
    apply_connective, enumerate_valuations, evaluate, is_designated, registry, Connective, EvalError, Logic,
    TruthValue, Valuation,
};
pub use syntax::{parse, render, BinaryOp, Constant, Formula, ParseError, Position, Quantifier};
pub use synthesis::{synthesize, value_probe, TruthFunction};

pub(crate) fn serialize_display<T: std::fmt::Display, S: serde::Serializer>(
    value: &T,
    serializer: S,
) -> Result<S::Ok, S::Error> {
    serializer.collect_str(value)
}
