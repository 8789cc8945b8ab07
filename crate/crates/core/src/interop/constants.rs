use std::collections::BTreeMap;

use crate::semantics::{evaluate, EvalError, Logic, TruthValue, Valuation};
use crate::syntax::{BinaryOp, Constant, Formula, Quantifier};

use super::definitions::{expand, DefinitionSet};

/// Values of the quantified definientia of `#t`, `#f`, `#b` and `#n`,
/// evaluated as sentences of `logic`.
pub fn constant_check(logic: &Logic) -> Result<BTreeMap<Constant, TruthValue>, EvalError> {
    if !logic.has_arrow() {
        return Err(EvalError::ConnectiveNotInLogic {
            logic: logic.name(),
            connective: BinaryOp::Arrow.symbol(),
        });
    }
    let defs = DefinitionSet::standard();
    let mut out = BTreeMap::new();
    for c in [Constant::Verum, Constant::Falsum, Constant::Both, Constant::Neither] {
        let sentence = expand(&Formula::constant(c), &defs);
        out.insert(c, evaluate(logic, &sentence, &Valuation::new())?);
    }
    Ok(out)
}

/// Binds every free atom of `f` with `q`, outermost first in name order.
pub fn closure(q: Quantifier, f: &Formula) -> Formula {
    f.free_atoms()
        .into_iter()
        .rev()
        .fold(f.clone(), |body, a| Formula::Quant(q, a, Box::new(body)))
}

/// Values in FDE+cmi of the existential and the universal closure of `f`.
pub fn block_closure_values(f: &Formula) -> Result<(TruthValue, TruthValue), EvalError> {
    let logic = Logic::named("FDE+cmi")?;
    let e = evaluate(logic, &closure(Quantifier::Exists, f), &Valuation::new())?;
    let a = evaluate(logic, &closure(Quantifier::Forall, f), &Valuation::new())?;
    Ok((e, a))
}
