use thiserror::Error;

use super::TruthValue;

/// Failures of evaluation and matrix lookup.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("unknown logic `{0}`")]
    UnknownLogic(String),
    #[error("connective `{connective}` is not available in {logic}")]
    ConnectiveNotInLogic {
        logic: &'static str,
        connective: &'static str,
    },
    #[error("constant `#{constant}` denotes a value outside {logic}")]
    ConstantNotInLogic { logic: &'static str, constant: char },
    #[error("value {value} is not admitted by {logic}")]
    ValueNotInLogic { logic: &'static str, value: TruthValue },
    #[error("valuation is rejected by the valuation filter of {logic}")]
    FilteredValuation { logic: &'static str },
    #[error("unbound atoms: {}", .0.join(", "))]
    UnboundAtoms(Vec<String>),
    #[error("connective `{connective}` takes {expected} arguments, got {got}")]
    Arity {
        connective: &'static str,
        expected: usize,
        got: usize,
    },
}
