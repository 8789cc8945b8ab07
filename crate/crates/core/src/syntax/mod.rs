//! Formula syntax: the AST, its text grammar, and substitution.

mod formula;
mod parse;
mod render;

pub use formula::{fresh_name, is_identifier, BinaryOp, Constant, Formula, Position, Quantifier, RESERVED};
pub use parse::{parse, ParseError};
pub use render::render;
