use thiserror::Error;

use crate::semantics::{EvalError, Logic};
use crate::syntax::{parse, BinaryOp, Formula, ParseError};

use super::definitions::{expand, placeholder, DefinitionSet};

/// A translation that is homomorphic on atoms, constants, `~`, `&`, `|`,
/// `>>` and quantifiers, and rewrites `->` by a template over `_1` and `_2`.
/// `=>`, `<->` and `<=>` are first expanded into the source conditional.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslationScheme {
    pub name: String,
    pub source: &'static Logic,
    pub target: &'static Logic,
    pub arrow: Formula,
}

#[derive(Debug, Error)]
pub enum SchemeError {
    #[error("unknown scheme or pair `{0}`")]
    Unknown(String),
    #[error(transparent)]
    Logic(#[from] EvalError),
    #[error("bad arrow template: {0}")]
    Template(#[from] ParseError),
    #[error("arrow template may only mention the atoms A and B")]
    TemplateAtoms,
}

const BUILTINS: [(&str, &str, &str, &str); 4] = [
    ("k3-l3", "K3+cmi", "L3", "A -> (A -> B)"),
    ("l3-k3", "L3", "K3+cmi", "(A -> B) & (~B -> ~A)"),
    ("lp-rm3", "LP+cmi", "RM3", "(A -> B) | B"),
    ("rm3-lp", "RM3", "LP+cmi", "(A -> B) & (~B -> ~A)"),
];

pub fn builtin_names() -> Vec<&'static str> {
    BUILTINS.iter().map(|b| b.0).collect()
}

impl TranslationScheme {
    /// A scheme whose arrow template is written with atoms `A` and `B` for
    /// the translated antecedent and consequent.
    pub fn from_template(
        name: &str,
        source: &str,
        target: &str,
        template: &str,
    ) -> Result<TranslationScheme, SchemeError> {
        let t = parse(template)?;
        if t.free_atoms().iter().any(|a| a != "A" && a != "B") {
            return Err(SchemeError::TemplateAtoms);
        }
        let arrow = t
            .substitute("A", &Formula::atom(placeholder(1)))
            .substitute("B", &Formula::atom(placeholder(2)));
        Ok(TranslationScheme {
            name: name.to_string(),
            source: Logic::named(source)?,
            target: Logic::named(target)?,
            arrow,
        })
    }

    pub fn builtin(name: &str) -> Result<TranslationScheme, SchemeError> {
        let (n, s, t, tpl) = BUILTINS
            .iter()
            .find(|b| b.0.eq_ignore_ascii_case(name))
            .ok_or_else(|| SchemeError::Unknown(name.to_string()))?;
        TranslationScheme::from_template(n, s, t, tpl)
    }

    pub fn apply(&self, f: &Formula) -> Formula {
        translate(f, self)
    }
}

/// Applies `s` to `f`, after expanding `=>`, `<->` and `<=>`.
pub fn translate(f: &Formula, s: &TranslationScheme) -> Formula {
    // `>>` is translated homomorphically rather than unfolded.
    let defs: DefinitionSet = DefinitionSet::connectives()
        .iter()
        .filter(|d| d.name != "hook")
        .cloned()
        .collect();
    rewrite(&expand(f, &defs), s)
}

fn rewrite(f: &Formula, s: &TranslationScheme) -> Formula {
    match f {
        Formula::Atom(_) | Formula::Const(_) => f.clone(),
        Formula::Neg(x) => Formula::neg(rewrite(x, s)),
        Formula::Quant(q, v, body) => Formula::Quant(*q, v.clone(), Box::new(rewrite(body, s))),
        Formula::Binary(BinaryOp::Arrow, l, r) => {
            let (l, r) = (rewrite(l, s), rewrite(r, s));
            s.arrow.substitute(&placeholder(1), &l).substitute(&placeholder(2), &r)
        }
        Formula::Binary(op, l, r) => Formula::binary(*op, rewrite(l, s), rewrite(r, s)),
    }
}
