use std::collections::BTreeMap;

use crate::syntax::{parse, BinaryOp, Constant, Formula};

/// What a definition defines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Definiendum {
    Connective(BinaryOp),
    Constant(Constant),
}

/// A defined connective or constant. The definiens mentions its arguments
/// as the placeholder atoms `_1` and `_2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Definition {
    pub name: &'static str,
    pub defines: Definiendum,
    pub definiens: Formula,
}

impl Definition {
    pub fn arity(&self) -> usize {
        match self.defines {
            Definiendum::Connective(_) => 2,
            Definiendum::Constant(_) => 0,
        }
    }

    /// The definiens with placeholders replaced by `args`.
    pub fn instantiate(&self, args: &[&Formula]) -> Formula {
        debug_assert_eq!(args.len(), self.arity());
        args.iter().enumerate().fold(self.definiens.clone(), |acc, (i, arg)| {
            acc.substitute(&placeholder(i + 1), arg)
        })
    }
}

pub fn placeholder(i: usize) -> String {
    format!("_{i}")
}

/// Parses a definiens written with `A` and `B` standing for `_1` and `_2`.
fn template(text: &str) -> Formula {
    let f = parse(text).expect("built-in definiens parses");
    f.substitute("A", &Formula::atom(placeholder(1)))
        .substitute("B", &Formula::atom(placeholder(2)))
}

/// A set of definitions keyed by what they define.
#[derive(Debug, Clone, Default)]
pub struct DefinitionSet(BTreeMap<Definiendum, Definition>);

impl DefinitionSet {
    pub fn empty() -> DefinitionSet {
        DefinitionSet::default()
    }

    pub fn insert(&mut self, d: Definition) {
        self.0.insert(d.defines, d);
    }

    pub fn get(&self, what: Definiendum) -> Option<&Definition> {
        self.0.get(&what)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Definition> {
        self.0.values()
    }

    /// `>>`, `=>`, `<=>` and `<->` in terms of `~`, `|`, `&` and `->`.
    pub fn connectives() -> DefinitionSet {
        let mut set = DefinitionSet::empty();
        set.insert(Definition {
            name: "hook",
            defines: Definiendum::Connective(BinaryOp::Hook),
            definiens: template("~A | B"),
        });
        set.insert(Definition {
            name: "darrow",
            defines: Definiendum::Connective(BinaryOp::DArrow),
            definiens: template("(A -> B) & (~B -> ~A)"),
        });
        set.insert(Definition {
            name: "dbicond",
            defines: Definiendum::Connective(BinaryOp::DBicond),
            definiens: template("(A => B) & (B => A)"),
        });
        set.insert(Definition {
            name: "bicond",
            defines: Definiendum::Connective(BinaryOp::Bicond),
            definiens: template("(A -> B) & (B -> A)"),
        });
        set
    }

    /// The connective definitions plus quantified definientia for the four
    /// constants. The definiens of `#n` is stored fully expanded.
    pub fn standard() -> DefinitionSet {
        let mut set = DefinitionSet::connectives();
        for (c, text) in [
            (Constant::Verum, "exists p. p"),
            (Constant::Falsum, "forall p. p"),
            (Constant::Both, "forall p. p -> p"),
        ] {
            set.insert(Definition {
                name: constant_name(c),
                defines: Definiendum::Constant(c),
                definiens: parse(text).expect("built-in definiens parses"),
            });
        }
        let n = parse("exists q. ((q <=> #t) -> #f) & ((q <=> #b) -> #f) & ((q <=> #f) -> #f) & q")
            .expect("built-in definiens parses");
        let n = expand(&n, &set);
        set.insert(Definition {
            name: constant_name(Constant::Neither),
            defines: Definiendum::Constant(Constant::Neither),
            definiens: n,
        });
        set
    }
}

fn constant_name(c: Constant) -> &'static str {
    match c {
        Constant::Verum => "t",
        Constant::Both => "b",
        Constant::Neither => "n",
        Constant::Falsum => "f",
    }
}

impl FromIterator<Definition> for DefinitionSet {
    fn from_iter<I: IntoIterator<Item = Definition>>(iter: I) -> Self {
        let mut set = DefinitionSet::empty();
        for d in iter {
            set.insert(d);
        }
        set
    }
}

/// Replaces every defined node with its definiens until none remain.
pub fn expand(f: &Formula, defs: &DefinitionSet) -> Formula {
    match f {
        Formula::Atom(_) => f.clone(),
        Formula::Const(c) => match defs.get(Definiendum::Constant(*c)) {
            Some(d) => expand(&d.definiens, defs),
            None => f.clone(),
        },
        Formula::Neg(x) => Formula::neg(expand(x, defs)),
        Formula::Quant(q, v, body) => Formula::Quant(*q, v.clone(), Box::new(expand(body, defs))),
        Formula::Binary(op, l, r) => {
            let (l, r) = (expand(l, defs), expand(r, defs));
            match defs.get(Definiendum::Connective(*op)) {
                Some(d) => expand(&d.instantiate(&[&l, &r]), defs),
                None => Formula::binary(*op, l, r),
            }
        }
    }
}
