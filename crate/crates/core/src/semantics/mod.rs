//! Truth values, logics and their matrices, valuations, and evaluation.

mod error;
mod eval;
mod logic;
mod valuation;
mod value;

pub use error::EvalError;
pub(crate) use eval::eval_unchecked;
pub use eval::{check_language, check_valuation, evaluate};
pub use logic::{
    apply_connective, is_designated, logic_names, registry, Connective, Logic, Matrix, ValuationFilter, CLASSICAL,
    FOUR, GAPPY, GLUTTY,
};
pub use valuation::{enumerate_valuations, Valuation, Valuations};
pub use value::{BadTruthValue, TruthValue};
