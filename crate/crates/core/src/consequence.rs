//! Validity, designation-preserving entailment, countermodels, truth tables
//! and equivalence, all by exhaustive enumeration of valuations.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::semantics::{check_language, eval_unchecked, EvalError, Logic, TruthValue, Valuation, Valuations};
use crate::syntax::Formula;

/// Premises and a conclusion.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sequent {
    pub premises: Vec<Formula>,
    pub conclusion: Formula,
}

impl Sequent {
    pub fn new(premises: Vec<Formula>, conclusion: Formula) -> Sequent {
        Sequent { premises, conclusion }
    }

    /// Free atoms of every formula, in name order.
    pub fn atoms(&self) -> Vec<String> {
        let mut all = BTreeSet::new();
        for f in self.premises.iter().chain(std::iter::once(&self.conclusion)) {
            all.extend(f.free_atoms());
        }
        all.into_iter().collect()
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let premises: Vec<String> = self.premises.iter().map(Formula::to_string).collect();
        write!(f, "{} |- {}", premises.join("; "), self.conclusion)
    }
}

/// A full truth table of one formula in one logic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TruthTable {
    pub logic: &'static str,
    pub atoms: Vec<String>,
    #[serde(serialize_with = "crate::serialize_display")]
    pub formula: Formula,
    pub rows: Vec<(Valuation, TruthValue)>,
}

impl TruthTable {
    pub fn values(&self) -> Vec<TruthValue> {
        self.rows.iter().map(|(_, v)| *v).collect()
    }
}

/// Header `logic | atoms | formula`, then `v(p1) v(p2) ... : value` per row.
impl fmt::Display for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} | {} | {}", self.logic, self.atoms.join(" "), self.formula)?;
        for (v, value) in &self.rows {
            let cells: Vec<String> = self
                .atoms
                .iter()
                .map(|a| v.get(a).expect("row covers atoms").to_string())
                .collect();
            if cells.is_empty() {
                writeln!(f, ": {value}")?;
            } else {
                writeln!(f, "{} : {value}", cells.join(" "))?;
            }
        }
        Ok(())
    }
}

fn sorted_atoms<'a>(fs: impl IntoIterator<Item = &'a Formula>) -> Vec<String> {
    let mut all = BTreeSet::new();
    for f in fs {
        all.extend(f.free_atoms());
    }
    all.into_iter().collect()
}

/// True iff `f` is designated on every admitted valuation of its free atoms.
pub fn valid(logic: &Logic, f: &Formula) -> Result<bool, EvalError> {
    entails(logic, &Sequent::new(Vec::new(), f.clone()))
}

/// True iff every admitted valuation designating all premises designates the conclusion.
pub fn entails(logic: &Logic, s: &Sequent) -> Result<bool, EvalError> {
    Ok(countermodel(logic, s)?.is_none())
}

/// The first valuation (in enumeration order) designating every premise
/// but not the conclusion.
pub fn countermodel(logic: &Logic, s: &Sequent) -> Result<Option<Valuation>, EvalError> {
    Ok(witnesses(logic, s)?.next())
}

/// Every countermodel, in enumeration order.
pub fn countermodels(logic: &Logic, s: &Sequent) -> Result<Vec<Valuation>, EvalError> {
    Ok(witnesses(logic, s)?.collect())
}

fn witnesses<'a>(logic: &'a Logic, s: &'a Sequent) -> Result<impl Iterator<Item = Valuation> + 'a, EvalError> {
    for f in s.premises.iter().chain(std::iter::once(&s.conclusion)) {
        check_language(logic, f)?;
    }
    let atoms = s.atoms();
    Ok(Valuations::new(logic, &atoms).filter(move |v| {
        s.premises
            .iter()
            .all(|p| logic.is_designated(eval_unchecked(logic, p, v)))
            && !logic.is_designated(eval_unchecked(logic, &s.conclusion, v))
    }))
}

/// Table of `f` over its free atoms in name order.
pub fn truth_table(logic: &'static Logic, f: &Formula) -> Result<TruthTable, EvalError> {
    table_over(logic, f, &sorted_atoms([f]))
}

/// Table of `f` over an explicit atom list, which must cover its free atoms.
pub fn table_over(logic: &'static Logic, f: &Formula, atoms: &[String]) -> Result<TruthTable, EvalError> {
    check_language(logic, f)?;
    let missing: Vec<String> = f.free_atoms().into_iter().filter(|a| !atoms.contains(a)).collect();
    if !missing.is_empty() {
        return Err(EvalError::UnboundAtoms(missing));
    }
    let rows = Valuations::new(logic, atoms)
        .map(|v| {
            let x = eval_unchecked(logic, f, &v);
            (v, x)
        })
        .collect();
    Ok(TruthTable {
        logic: logic.name(),
        atoms: atoms.to_vec(),
        formula: f.clone(),
        rows,
    })
}

/// Value identity on every admitted valuation over the union of free atoms.
pub fn equivalent(logic: &Logic, f: &Formula, g: &Formula) -> Result<bool, EvalError> {
    equivalent_across(logic, f, logic, g)
}

/// Compares `f` read in `left` with `g` read in `right`, valuation by
/// valuation, over the valuations admitted by both logics.
pub fn equivalent_across(left: &Logic, f: &Formula, right: &Logic, g: &Formula) -> Result<bool, EvalError> {
    Ok(first_difference(left, f, right, g)?.is_none())
}

/// The first valuation on which `f` in `left` and `g` in `right` differ.
pub fn first_difference(left: &Logic, f: &Formula, right: &Logic, g: &Formula) -> Result<Option<Valuation>, EvalError> {
    check_language(left, f)?;
    check_language(right, g)?;
    let atoms = sorted_atoms([f, g]);
    Ok(Valuations::new(left, &atoms)
        .filter(|v| v.admitted_by(right))
        .find(|v| eval_unchecked(left, f, v) != eval_unchecked(right, g, v)))
}
