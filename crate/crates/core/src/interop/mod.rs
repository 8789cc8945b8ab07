//! Defined connectives and constants, translations between logics, and
//! synonymy checks for the two three-valued pairs.

mod constants;
mod definitions;
mod synonymy;
mod translate;

pub use constants::{block_closure_values, closure, constant_check};
pub use definitions::{expand, placeholder, Definiendum, Definition, DefinitionSet};
pub use synonymy::{check_synonymy, pair_names, ConditionVerdict, SynonymPair, SynonymyReport};
pub use translate::{builtin_names, translate, SchemeError, TranslationScheme};
