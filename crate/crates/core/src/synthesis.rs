//! Formulas realising arbitrary four-valued truth functions in FDE+cmi,
//! with the four constants as primitives.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::pool::{Bound, Grammar, SemanticPool};
use crate::semantics::{Logic, TruthValue};
use crate::syntax::{BinaryOp, Constant, Formula};

/// A total table from `arity`-tuples of values to a value. Rows are stored
/// in enumeration order, first argument slowest.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruthFunction {
    arity: u32,
    table: Vec<TruthValue>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SynthesisError {
    #[error("table of arity {arity} needs {expected} rows, got {got}")]
    NotTotal { arity: u32, expected: usize, got: usize },
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
}

fn format_error(line: usize, message: impl Into<String>) -> SynthesisError {
    SynthesisError::Format {
        line,
        message: message.into(),
    }
}

impl TruthFunction {
    pub fn new(arity: u32, table: Vec<TruthValue>) -> Result<TruthFunction, SynthesisError> {
        let expected = 4usize.pow(arity);
        if table.len() != expected {
            return Err(SynthesisError::NotTotal {
                arity,
                expected,
                got: table.len(),
            });
        }
        Ok(TruthFunction { arity, table })
    }

    pub fn from_fn(arity: u32, f: impl Fn(&[TruthValue]) -> TruthValue) -> TruthFunction {
        let table = (0..4usize.pow(arity)).map(|i| f(&row_args(arity, i))).collect();
        TruthFunction { arity, table }
    }

    pub fn arity(&self) -> u32 {
        self.arity
    }

    pub fn table(&self) -> &[TruthValue] {
        &self.table
    }

    pub fn get(&self, args: &[TruthValue]) -> TruthValue {
        assert_eq!(args.len(), self.arity as usize);
        let i = args.iter().fold(0, |acc, v| acc * 4 + v.index());
        self.table[i]
    }

    /// `(args, value)` pairs in enumeration order.
    pub fn rows(&self) -> impl Iterator<Item = (Vec<TruthValue>, TruthValue)> + '_ {
        self.table
            .iter()
            .enumerate()
            .map(|(i, v)| (row_args(self.arity, i), *v))
    }
}

fn row_args(arity: u32, mut i: usize) -> Vec<TruthValue> {
    let mut args = vec![TruthValue::T; arity as usize];
    for slot in args.iter_mut().rev() {
        *slot = TruthValue::from_index(i % 4);
        i /= 4;
    }
    args
}

/// `arity n`, then one `v1 ... vn : v` line per row.
impl fmt::Display for TruthFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "arity {}", self.arity)?;
        for (args, v) in self.rows() {
            let cells: Vec<String> = args.iter().map(TruthValue::to_string).collect();
            if cells.is_empty() {
                writeln!(f, ": {v}")?;
            } else {
                writeln!(f, "{} : {v}", cells.join(" "))?;
            }
        }
        Ok(())
    }
}

/// Rows may come in any order but each argument tuple exactly once. Blank
/// lines and lines starting with `#` are skipped.
impl FromStr for TruthFunction {
    type Err = SynthesisError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (n, header) = lines.next().ok_or_else(|| format_error(1, "missing `arity n` line"))?;
        let arity: u32 = header
            .strip_prefix("arity")
            .and_then(|rest| rest.trim().parse().ok())
            .filter(|a| *a <= 8)
            .ok_or_else(|| format_error(n, "expected `arity n` with n at most 8"))?;
        let size = 4usize.pow(arity);
        let mut table: Vec<Option<TruthValue>> = vec![None; size];
        let mut got = 0;
        for (n, line) in lines {
            let (lhs, rhs) = line
                .split_once(':')
                .ok_or_else(|| format_error(n, "expected `v1 ... vn : v`"))?;
            let value: TruthValue = rhs
                .trim()
                .parse()
                .map_err(|e: crate::semantics::BadTruthValue| format_error(n, e.to_string()))?;
            let args = lhs
                .split_whitespace()
                .map(|w| w.parse::<TruthValue>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| format_error(n, e.to_string()))?;
            if args.len() != arity as usize {
                return Err(format_error(
                    n,
                    format!("expected {arity} argument values, got {}", args.len()),
                ));
            }
            let i = args.iter().fold(0, |acc, v| acc * 4 + v.index());
            if table[i].replace(value).is_some() {
                return Err(format_error(n, "duplicate row"));
            }
            got += 1;
        }
        if got != size {
            return Err(SynthesisError::NotTotal {
                arity,
                expected: size,
                got,
            });
        }
        Ok(TruthFunction {
            arity,
            table: table.into_iter().map(|v| v.expect("all rows seen")).collect(),
        })
    }
}

/// `((f <=> c) -> #f) -> #f`: `T` when `f` takes the value of `c`, else `F`.
pub fn value_probe(f: Formula, c: Constant) -> Formula {
    let falsum = || Formula::constant(Constant::Falsum);
    Formula::arrow(
        Formula::arrow(Formula::dbicond(f, Formula::constant(c)), falsum()),
        falsum(),
    )
}

/// Atoms `p1 ... pn` used by [`synthesize`].
pub fn argument_atoms(arity: u32) -> Vec<String> {
    (1..=arity).map(|i| format!("p{i}")).collect()
}

/// A right-nested conjunction with one conditional per row:
/// `(p1 <=> c1) & ... & (pn <=> cn) -> c`.
pub fn synthesize(tf: &TruthFunction) -> Formula {
    if tf.arity == 0 {
        return Formula::constant(Constant::for_value(tf.table[0]));
    }
    let atoms = argument_atoms(tf.arity);
    let conditionals =
        tf.rows().map(|(args, v)| {
            let antecedent =
                Formula::conjunction(atoms.iter().zip(&args).map(|(a, c)| {
                    Formula::dbicond(Formula::atom(a.clone()), Formula::constant(Constant::for_value(*c)))
                }))
                .expect("arity is positive");
            Formula::arrow(antecedent, Formula::constant(Constant::for_value(v)))
        });
    Formula::conjunction(conditionals).expect("at least one row")
}

/// A constant-free formula in `p` of depth at most `max_depth` whose
/// FDE+cmi table is `target`, if one exists.
pub fn find_constant_free_unary(target: &TruthFunction, max_depth: usize) -> Option<Formula> {
    assert_eq!(target.arity, 1);
    let logic = Logic::named("FDE+cmi").expect("registered");
    let g = Grammar::new(&["p"], true, &BinaryOp::ALL);
    SemanticPool::build(&[logic], &g, Bound::Depth(max_depth))
        .classes
        .into_iter()
        .find(|(t, _)| t.as_slice() == target.table())
        .map(|(_, f)| f)
}
