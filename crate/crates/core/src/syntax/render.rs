//! Canonical ASCII rendering with the fewest parentheses the grammar allows.

use std::fmt;

use super::formula::{BinaryOp, Formula};

const LEVEL_BICOND: u8 = 1;
const LEVEL_DARROW: u8 = 2;
const LEVEL_ARROW: u8 = 3;
const LEVEL_OR: u8 = 4;
const LEVEL_AND: u8 = 5;

fn level(op: BinaryOp) -> u8 {
    match op {
        BinaryOp::Bicond | BinaryOp::DBicond => LEVEL_BICOND,
        BinaryOp::DArrow => LEVEL_DARROW,
        BinaryOp::Arrow | BinaryOp::Hook => LEVEL_ARROW,
        BinaryOp::Or => LEVEL_OR,
        BinaryOp::And => LEVEL_AND,
    }
}

fn left_assoc(op: BinaryOp) -> bool {
    matches!(op, BinaryOp::And | BinaryOp::Or)
}

/// Renders `f` in its canonical text form.
pub fn render(f: &Formula) -> String {
    let mut out = String::new();
    write_formula(f, &mut out, 0, None, true);
    out
}

/// `min` is the loosest level that may appear bare here. `same_level` is the
/// operator of the enclosing node when this child sits at its own level, so
/// that a different operator of that level is parenthesised. `open_right` is
/// false when text follows this subformula, which would otherwise be swallowed
/// by a quantifier body.
fn write_formula(f: &Formula, out: &mut String, min: u8, same_level: Option<BinaryOp>, open_right: bool) {
    match f {
        Formula::Atom(a) => out.push_str(a),
        Formula::Const(c) => out.push_str(&c.to_string()),
        Formula::Neg(x) => {
            out.push('~');
            write_formula(x, out, u8::MAX, None, open_right);
        }
        Formula::Quant(q, v, body) => {
            let parens = !open_right;
            if parens {
                out.push('(');
            }
            out.push_str(q.keyword());
            out.push(' ');
            out.push_str(v);
            out.push_str(". ");
            write_formula(body, out, 0, None, true);
            if parens {
                out.push(')');
            }
        }
        Formula::Binary(op, l, r) => {
            let lv = level(*op);
            let parens = lv < min || (lv == min && same_level.is_some_and(|s| s != *op));
            let open = open_right || parens;
            if parens {
                out.push('(');
            }
            let (lmin, rmin) = if left_assoc(*op) { (lv, lv + 1) } else { (lv + 1, lv) };
            write_formula(l, out, lmin, Some(*op), false);
            out.push(' ');
            out.push_str(op.symbol());
            out.push(' ');
            write_formula(r, out, rmin, Some(*op), open);
            if parens {
                out.push(')');
            }
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self))
    }
}
