use super::{EvalError, Logic, TruthValue, Valuation};
use crate::syntax::{Formula, Quantifier};

/// Checks that every connective and constant of `f` is available in `logic`.
pub fn check_language(logic: &Logic, f: &Formula) -> Result<(), EvalError> {
    match f {
        Formula::Atom(_) => Ok(()),
        Formula::Const(c) => {
            if logic.admits_constant(*c) {
                Ok(())
            } else {
                Err(EvalError::ConstantNotInLogic {
                    logic: logic.name(),
                    constant: c.letter(),
                })
            }
        }
        Formula::Neg(x) | Formula::Quant(_, _, x) => check_language(logic, x),
        Formula::Binary(op, l, r) => {
            if logic.matrix(*op).is_none() {
                return Err(EvalError::ConnectiveNotInLogic {
                    logic: logic.name(),
                    connective: op.symbol(),
                });
            }
            check_language(logic, l)?;
            check_language(logic, r)
        }
    }
}

/// Checks that `v` covers the free atoms of `f` and is admitted by `logic`.
pub fn check_valuation(logic: &Logic, f: &Formula, v: &Valuation) -> Result<(), EvalError> {
    let missing: Vec<String> = f.free_atoms().into_iter().filter(|a| v.get(a).is_none()).collect();
    if !missing.is_empty() {
        return Err(EvalError::UnboundAtoms(missing));
    }
    if let Some(bad) = v.values().find(|x| !logic.admits(*x)) {
        return Err(EvalError::ValueNotInLogic {
            logic: logic.name(),
            value: bad,
        });
    }
    if !logic.filter().admits(v.values()) {
        return Err(EvalError::FilteredValuation { logic: logic.name() });
    }
    Ok(())
}

/// Value of `f` in `logic` under `v`.
///
/// Quantifiers range over the logic's whole value set: `exists` takes the
/// lattice join of the body's values, `forall` the meet.
pub fn evaluate(logic: &Logic, f: &Formula, v: &Valuation) -> Result<TruthValue, EvalError> {
    check_language(logic, f)?;
    check_valuation(logic, f, v)?;
    Ok(eval_unchecked(logic, f, v))
}

/// Evaluation without the up-front checks. Callers must have run
/// [`check_language`] and supply a valuation covering the free atoms.
pub(crate) fn eval_unchecked(logic: &Logic, f: &Formula, v: &Valuation) -> TruthValue {
    let mut env = Vec::new();
    eval_in(logic, f, v, &mut env)
}

fn eval_in<'f>(logic: &Logic, f: &'f Formula, v: &Valuation, env: &mut Vec<(&'f str, TruthValue)>) -> TruthValue {
    match f {
        Formula::Atom(a) => env
            .iter()
            .rev()
            .find(|(name, _)| *name == a)
            .map(|(_, x)| *x)
            .or_else(|| v.get(a))
            .expect("free atoms covered by valuation"),
        Formula::Const(c) => c.value(),
        Formula::Neg(x) => logic.neg_unchecked(eval_in(logic, x, v, env)),
        Formula::Binary(op, l, r) => {
            let a = eval_in(logic, l, v, env);
            let b = eval_in(logic, r, v, env);
            logic.binary_unchecked(*op, a, b)
        }
        Formula::Quant(q, var, body) => {
            let mut acc = match q {
                Quantifier::Forall => TruthValue::T,
                Quantifier::Exists => TruthValue::F,
            };
            for &x in logic.values() {
                env.push((var, x));
                let y = eval_in(logic, body, v, env);
                env.pop();
                acc = match q {
                    Quantifier::Forall => acc.meet(y),
                    Quantifier::Exists => acc.join(y),
                };
            }
            acc
        }
    }
}
