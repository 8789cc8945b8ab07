use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use super::error::EvalError;
use super::value::TruthValue::{self, *};
use crate::syntax::{BinaryOp, Constant};

/// A truth-functional connective as it appears in a matrix lookup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Connective {
    Neg,
    Binary(BinaryOp),
}

impl Connective {
    pub fn symbol(self) -> &'static str {
        match self {
            Connective::Neg => "~",
            Connective::Binary(op) => op.symbol(),
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Connective::Neg => 1,
            Connective::Binary(_) => 2,
        }
    }
}

impl From<BinaryOp> for Connective {
    fn from(op: BinaryOp) -> Self {
        Connective::Binary(op)
    }
}

impl fmt::Display for Connective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// A binary truth table indexed by [`TruthValue::index`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Matrix([[TruthValue; 4]; 4]);

impl Matrix {
    fn build(values: &[TruthValue], op: impl Fn(TruthValue, TruthValue) -> TruthValue) -> Matrix {
        // Entries outside the value set are never read.
        let mut m = [[F; 4]; 4];
        for &a in values {
            for &b in values {
                m[a.index()][b.index()] = op(a, b);
            }
        }
        Matrix(m)
    }

    #[inline]
    pub fn get(&self, a: TruthValue, b: TruthValue) -> TruthValue {
        self.0[a.index()][b.index()]
    }
}

/// Constraint on whole valuations beyond the value set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ValuationFilter {
    Any,
    /// No atom is `B` while another is `N`.
    NoGlutGapMix,
}

impl ValuationFilter {
    pub fn admits(self, values: impl IntoIterator<Item = TruthValue>) -> bool {
        match self {
            ValuationFilter::Any => true,
            ValuationFilter::NoGlutGapMix => {
                let (mut glut, mut gap) = (false, false);
                for v in values {
                    glut |= v == B;
                    gap |= v == N;
                }
                !(glut && gap)
            }
        }
    }
}

/// A named many-valued logic: value set, designated values, connective
/// matrices and a valuation filter.
#[derive(Debug, Clone)]
pub struct Logic {
    name: &'static str,
    values: Vec<TruthValue>,
    designated: Vec<TruthValue>,
    neg: [TruthValue; 4],
    binary: [Option<Matrix>; 7],
    filter: ValuationFilter,
}

fn op_slot(op: BinaryOp) -> usize {
    BinaryOp::ALL.iter().position(|o| *o == op).expect("listed")
}

/// The conditional added to FDE and its relatives: the consequent's value
/// when the antecedent is designated, `T` otherwise.
fn cmi(a: TruthValue, b: TruthValue) -> TruthValue {
    if a.has_true() {
        b
    } else {
        T
    }
}

/// Łukasiewicz's conditional on `{T, N, F}` read as `{1, 1/2, 0}`.
fn lukasiewicz(a: TruthValue, b: TruthValue) -> TruthValue {
    let num = |v: TruthValue| match v {
        T => 2i8,
        N => 1,
        F => 0,
        B => unreachable!("B is not an L3 value"),
    };
    match (2 - num(a) + num(b)).min(2) {
        2 => T,
        1 => N,
        _ => F,
    }
}

/// The RM3 (Sugihara) conditional on the chain `F < B < T`.
fn sugihara(a: TruthValue, b: TruthValue) -> TruthValue {
    let rank = |v: TruthValue| match v {
        F => 0,
        B => 1,
        T => 2,
        N => unreachable!("N is not an RM3 value"),
    };
    if rank(a) <= rank(b) {
        a.negate().join(b)
    } else {
        a.negate().meet(b)
    }
}

impl Logic {
    fn lattice(name: &'static str, values: &[TruthValue], filter: ValuationFilter) -> Logic {
        let mut binary = [None; 7];
        binary[op_slot(BinaryOp::And)] = Some(Matrix::build(values, TruthValue::meet));
        binary[op_slot(BinaryOp::Or)] = Some(Matrix::build(values, TruthValue::join));
        binary[op_slot(BinaryOp::Hook)] = Some(Matrix::build(values, |a, b| a.negate().join(b)));
        Logic {
            name,
            values: values.to_vec(),
            designated: values.iter().copied().filter(|v| v.has_true()).collect(),
            neg: TruthValue::ALL.map(TruthValue::negate),
            binary,
            filter,
        }
    }

    /// Adds `arrow` as the primitive `->` and derives `=>`, `<->` and `<=>` from it.
    fn with_arrow(mut self, arrow: impl Fn(TruthValue, TruthValue) -> TruthValue) -> Logic {
        let values = self.values.clone();
        let arrow = Matrix::build(&values, arrow);
        let darrow = Matrix::build(&values, |a, b| arrow.get(a, b).meet(arrow.get(b.negate(), a.negate())));
        let bicond = Matrix::build(&values, |a, b| arrow.get(a, b).meet(arrow.get(b, a)));
        let dbicond = Matrix::build(&values, |a, b| darrow.get(a, b).meet(darrow.get(b, a)));
        self.binary[op_slot(BinaryOp::Arrow)] = Some(arrow);
        self.binary[op_slot(BinaryOp::DArrow)] = Some(darrow);
        self.binary[op_slot(BinaryOp::Bicond)] = Some(bicond);
        self.binary[op_slot(BinaryOp::DBicond)] = Some(dbicond);
        self
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    /// Admitted values in enumeration order.
    pub fn values(&self) -> &[TruthValue] {
        &self.values
    }

    pub fn designated(&self) -> &[TruthValue] {
        &self.designated
    }

    pub fn filter(&self) -> ValuationFilter {
        self.filter
    }

    pub fn admits(&self, v: TruthValue) -> bool {
        self.values.contains(&v)
    }

    pub fn is_designated(&self, v: TruthValue) -> bool {
        self.designated.contains(&v)
    }

    pub fn has_arrow(&self) -> bool {
        self.matrix(BinaryOp::Arrow).is_some()
    }

    pub fn admits_connective(&self, c: Connective) -> bool {
        match c {
            Connective::Neg => true,
            Connective::Binary(op) => self.matrix(op).is_some(),
        }
    }

    pub fn admits_constant(&self, c: Constant) -> bool {
        self.admits(c.value())
    }

    pub fn matrix(&self, op: BinaryOp) -> Option<&Matrix> {
        self.binary[op_slot(op)].as_ref()
    }

    #[inline]
    pub(crate) fn neg_unchecked(&self, a: TruthValue) -> TruthValue {
        self.neg[a.index()]
    }

    #[inline]
    pub(crate) fn binary_unchecked(&self, op: BinaryOp, a: TruthValue, b: TruthValue) -> TruthValue {
        self.binary[op_slot(op)]
            .as_ref()
            .expect("connective checked before evaluation")
            .get(a, b)
    }

    /// Join over a non-empty set of admitted values.
    pub fn join_all(values: impl IntoIterator<Item = TruthValue>) -> TruthValue {
        values.into_iter().fold(F, TruthValue::join)
    }

    /// Meet over a set of admitted values; `T` when empty.
    pub fn meet_all(values: impl IntoIterator<Item = TruthValue>) -> TruthValue {
        values.into_iter().fold(T, TruthValue::meet)
    }

    /// Looks up a logic by its exact registry name.
    pub fn named(name: &str) -> Result<&'static Logic, EvalError> {
        registry()
            .iter()
            .find(|l| l.name == name)
            .ok_or_else(|| EvalError::UnknownLogic(name.to_string()))
    }

    /// Applies `connective` to `args` using this logic's matrices.
    pub fn apply(&self, connective: Connective, args: &[TruthValue]) -> Result<TruthValue, EvalError> {
        if args.len() != connective.arity() {
            return Err(EvalError::Arity {
                connective: connective.symbol(),
                expected: connective.arity(),
                got: args.len(),
            });
        }
        if let Some(v) = args.iter().find(|v| !self.admits(**v)) {
            return Err(EvalError::ValueNotInLogic {
                logic: self.name,
                value: *v,
            });
        }
        match connective {
            Connective::Neg => Ok(self.neg[args[0].index()]),
            Connective::Binary(op) => {
                self.matrix(op)
                    .map(|m| m.get(args[0], args[1]))
                    .ok_or(EvalError::ConnectiveNotInLogic {
                        logic: self.name,
                        connective: op.symbol(),
                    })
            }
        }
    }
}

impl PartialEq for Logic {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
    }
}

impl Eq for Logic {}

impl fmt::Display for Logic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name)
    }
}

pub const FOUR: [TruthValue; 4] = [T, B, N, F];
pub const GAPPY: [TruthValue; 3] = [T, N, F];
pub const GLUTTY: [TruthValue; 3] = [T, B, F];
pub const CLASSICAL: [TruthValue; 2] = [T, F];

/// Every registered logic: FDE, K3, LP, M, their `+cmi` extensions, L3, RM3 and CL.
pub fn registry() -> &'static [Logic] {
    static REGISTRY: OnceLock<Vec<Logic>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        use ValuationFilter::{Any, NoGlutGapMix};
        vec![
            Logic::lattice("FDE", &FOUR, Any),
            Logic::lattice("K3", &GAPPY, Any),
            Logic::lattice("LP", &GLUTTY, Any),
            Logic::lattice("M", &FOUR, NoGlutGapMix),
            Logic::lattice("FDE+cmi", &FOUR, Any).with_arrow(cmi),
            Logic::lattice("K3+cmi", &GAPPY, Any).with_arrow(cmi),
            Logic::lattice("LP+cmi", &GLUTTY, Any).with_arrow(cmi),
            Logic::lattice("M+cmi", &FOUR, NoGlutGapMix).with_arrow(cmi),
            Logic::lattice("L3", &GAPPY, Any).with_arrow(lukasiewicz),
            Logic::lattice("RM3", &GLUTTY, Any).with_arrow(sugihara),
            Logic::lattice("CL", &CLASSICAL, Any).with_arrow(cmi),
        ]
    })
}

/// Registry names in registry order.
pub fn logic_names() -> Vec<&'static str> {
    registry().iter().map(Logic::name).collect()
}

/// Applies a connective in `logic`; free-function form of [`Logic::apply`].
pub fn apply_connective(logic: &Logic, connective: Connective, args: &[TruthValue]) -> Result<TruthValue, EvalError> {
    logic.apply(connective, args)
}

/// Whether `v` is designated in `logic`.
pub fn is_designated(logic: &Logic, v: TruthValue) -> bool {
    logic.is_designated(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn logic(name: &str) -> &'static Logic {
        Logic::named(name).unwrap()
    }

    #[test]
    fn registry_is_complete() {
        assert_eq!(
            logic_names(),
            ["FDE", "K3", "LP", "M", "FDE+cmi", "K3+cmi", "LP+cmi", "M+cmi", "L3", "RM3", "CL"]
        );
        assert!(Logic::named("S5").is_err());
    }

    #[test]
    fn designated_values() {
        assert_eq!(logic("FDE+cmi").designated(), &[T, B]);
        assert_eq!(logic("K3").designated(), &[T]);
        assert_eq!(logic("CL").designated(), &[T]);
        assert!(is_designated(logic("LP"), B));
        assert!(!is_designated(logic("K3"), N));
        assert!(!is_designated(logic("FDE+cmi"), F));
        for l in registry() {
            let expect: Vec<_> = l.values().iter().copied().filter(|v| matches!(v, T | B)).collect();
            assert_eq!(l.designated(), expect.as_slice(), "{l}");
        }
    }

    #[test]
    fn bare_lattice_logics_reject_arrow() {
        for name in ["FDE", "K3", "LP", "M"] {
            let err = apply_connective(logic(name), BinaryOp::Arrow.into(), &[T, T]).unwrap_err();
            assert!(matches!(err, EvalError::ConnectiveNotInLogic { .. }), "{name}");
            assert!(apply_connective(logic(name), BinaryOp::Hook.into(), &[T, F]).is_ok());
        }
    }

    #[test]
    fn values_outside_the_logic_are_rejected() {
        assert!(matches!(
            apply_connective(logic("K3"), BinaryOp::And.into(), &[B, T]),
            Err(EvalError::ValueNotInLogic { value: B, .. })
        ));
        assert!(matches!(
            apply_connective(logic("K3"), Connective::Neg, &[T, T]),
            Err(EvalError::Arity { .. })
        ));
    }

    #[test]
    fn spot_checks() {
        let and = BinaryOp::And.into();
        let arrow = BinaryOp::Arrow.into();
        assert_eq!(apply_connective(logic("FDE"), and, &[B, N]).unwrap(), F);
        assert_eq!(apply_connective(logic("FDE+cmi"), arrow, &[N, F]).unwrap(), T);
        assert_eq!(apply_connective(logic("FDE+cmi"), arrow, &[B, F]).unwrap(), F);
        assert_eq!(apply_connective(logic("L3"), arrow, &[N, F]).unwrap(), N);
        assert_eq!(apply_connective(logic("RM3"), arrow, &[T, B]).unwrap(), F);
    }

    #[test]
    fn m_filter_rejects_mixed_valuations() {
        let m = logic("M");
        assert!(!m.filter().admits([B, N]));
        assert!(m.filter().admits([B, B, T, F]));
        assert!(m.filter().admits([N, F]));
    }

    #[test]
    fn restrictions_agree_with_fde() {
        let fde = logic("FDE+cmi");
        for name in ["K3", "LP", "K3+cmi", "LP+cmi", "CL", "M", "M+cmi"] {
            let l = logic(name);
            for &a in l.values() {
                assert_eq!(
                    l.apply(Connective::Neg, &[a]).unwrap(),
                    fde.apply(Connective::Neg, &[a]).unwrap()
                );
                for &b in l.values() {
                    for op in BinaryOp::ALL {
                        if let Ok(v) = l.apply(op.into(), &[a, b]) {
                            assert_eq!(v, fde.apply(op.into(), &[a, b]).unwrap(), "{name} {op:?} {a} {b}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn designation_transfer_and_classical_shadow() {
        let fde = logic("FDE+cmi");
        let arrow = fde.matrix(BinaryOp::Arrow).unwrap();
        for a in FOUR {
            for b in FOUR {
                let v = arrow.get(a, b);
                if fde.is_designated(v) && fde.is_designated(a) {
                    assert!(fde.is_designated(b), "{a} -> {b}");
                }
            }
        }
        for a in CLASSICAL {
            for b in CLASSICAL {
                let material = if a == T && b == F { F } else { T };
                assert_eq!(arrow.get(a, b), material);
            }
        }
    }

    #[test]
    fn m_filter_is_closed_under_matrices() {
        // Unmixed inputs never produce a mixed output, so an atom-level
        // filter is the same as a formula-level one for quantifier-free,
        // constant-free formulas.
        let fde = logic("FDE+cmi");
        for side in [GLUTTY, GAPPY] {
            for &a in &side {
                assert!(side.contains(&fde.neg_unchecked(a)));
                for &b in &side {
                    for op in BinaryOp::ALL {
                        assert!(side.contains(&fde.binary_unchecked(op, a, b)), "{op:?} {a} {b}");
                    }
                }
            }
        }
    }
}
