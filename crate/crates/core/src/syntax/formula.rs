use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::semantics::TruthValue;

/// Reserved words of the text grammar; never valid as atom names.
pub const RESERVED: [&str; 2] = ["forall", "exists"];

/// Returns true if `name` is a legal atom or bound-variable name.
pub fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_') && !RESERVED.contains(&name)
}

/// One of the four propositional constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Constant {
    Verum,
    Both,
    Neither,
    Falsum,
}

impl Constant {
    pub const ALL: [Constant; 4] = [Constant::Verum, Constant::Both, Constant::Neither, Constant::Falsum];

    /// The truth value the constant denotes.
    pub fn value(self) -> TruthValue {
        match self {
            Constant::Verum => TruthValue::T,
            Constant::Both => TruthValue::B,
            Constant::Neither => TruthValue::N,
            Constant::Falsum => TruthValue::F,
        }
    }

    pub fn for_value(v: TruthValue) -> Constant {
        match v {
            TruthValue::T => Constant::Verum,
            TruthValue::B => Constant::Both,
            TruthValue::N => Constant::Neither,
            TruthValue::F => Constant::Falsum,
        }
    }

    /// Single lowercase letter used after `#` in the grammar.
    pub fn letter(self) -> char {
        match self {
            Constant::Verum => 't',
            Constant::Both => 'b',
            Constant::Neither => 'n',
            Constant::Falsum => 'f',
        }
    }

    pub fn from_letter(c: char) -> Option<Constant> {
        match c {
            't' => Some(Constant::Verum),
            'b' => Some(Constant::Both),
            'n' => Some(Constant::Neither),
            'f' => Some(Constant::Falsum),
            _ => None,
        }
    }
}

impl fmt::Display for Constant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.letter())
    }
}

/// Binary connectives of the object language.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum BinaryOp {
    And,
    Or,
    /// The classical material implication `->`.
    Arrow,
    /// `>>`, defined as `~a | b`.
    Hook,
    /// `=>`, the contraposable conditional.
    DArrow,
    /// `<->`, built from `->`.
    Bicond,
    /// `<=>`, built from `=>`.
    DBicond,
}

impl BinaryOp {
    pub const ALL: [BinaryOp; 7] = [
        BinaryOp::And,
        BinaryOp::Or,
        BinaryOp::Arrow,
        BinaryOp::Hook,
        BinaryOp::DArrow,
        BinaryOp::Bicond,
        BinaryOp::DBicond,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            BinaryOp::And => "&",
            BinaryOp::Or => "|",
            BinaryOp::Arrow => "->",
            BinaryOp::Hook => ">>",
            BinaryOp::DArrow => "=>",
            BinaryOp::Bicond => "<->",
            BinaryOp::DBicond => "<=>",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Quantifier {
    Forall,
    Exists,
}

impl Quantifier {
    pub fn keyword(self) -> &'static str {
        match self {
            Quantifier::Forall => "forall",
            Quantifier::Exists => "exists",
        }
    }
}

/// A formula of the propositional language with quantifiers over truth values.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Atom(String),
    Const(Constant),
    Neg(Box<Formula>),
    Binary(BinaryOp, Box<Formula>, Box<Formula>),
    Quant(Quantifier, String, Box<Formula>),
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Formula {
        Formula::Atom(name.into())
    }

    pub fn constant(c: Constant) -> Formula {
        Formula::Const(c)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(f: Formula) -> Formula {
        Formula::Neg(Box::new(f))
    }

    pub fn binary(op: BinaryOp, l: Formula, r: Formula) -> Formula {
        Formula::Binary(op, Box::new(l), Box::new(r))
    }

    pub fn and(l: Formula, r: Formula) -> Formula {
        Formula::binary(BinaryOp::And, l, r)
    }

    pub fn or(l: Formula, r: Formula) -> Formula {
        Formula::binary(BinaryOp::Or, l, r)
    }

    pub fn arrow(l: Formula, r: Formula) -> Formula {
        Formula::binary(BinaryOp::Arrow, l, r)
    }

    pub fn hook(l: Formula, r: Formula) -> Formula {
        Formula::binary(BinaryOp::Hook, l, r)
    }

    pub fn darrow(l: Formula, r: Formula) -> Formula {
        Formula::binary(BinaryOp::DArrow, l, r)
    }

    pub fn bicond(l: Formula, r: Formula) -> Formula {
        Formula::binary(BinaryOp::Bicond, l, r)
    }

    pub fn dbicond(l: Formula, r: Formula) -> Formula {
        Formula::binary(BinaryOp::DBicond, l, r)
    }

    pub fn forall(var: impl Into<String>, body: Formula) -> Formula {
        Formula::Quant(Quantifier::Forall, var.into(), Box::new(body))
    }

    pub fn exists(var: impl Into<String>, body: Formula) -> Formula {
        Formula::Quant(Quantifier::Exists, var.into(), Box::new(body))
    }

    /// Right-nested conjunction of `parts`; `None` when empty.
    pub fn conjunction(parts: impl IntoIterator<Item = Formula>) -> Option<Formula> {
        let mut parts: Vec<Formula> = parts.into_iter().collect();
        let mut acc = parts.pop()?;
        while let Some(f) = parts.pop() {
            acc = Formula::and(f, acc);
        }
        Some(acc)
    }

    /// Immediate subformulas, in position order.
    pub fn children(&self) -> Vec<&Formula> {
        match self {
            Formula::Atom(_) | Formula::Const(_) => vec![],
            Formula::Neg(x) | Formula::Quant(_, _, x) => vec![x],
            Formula::Binary(_, l, r) => vec![l, r],
        }
    }

    /// Total number of nodes.
    pub fn size(&self) -> usize {
        1 + self.children().into_iter().map(Formula::size).sum::<usize>()
    }

    /// Number of non-leaf nodes.
    pub fn connective_count(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Const(_) => 0,
            _ => {
                1 + self
                    .children()
                    .into_iter()
                    .map(Formula::connective_count)
                    .sum::<usize>()
            }
        }
    }

    pub fn depth(&self) -> usize {
        self.children()
            .into_iter()
            .map(Formula::depth)
            .max()
            .map_or(0, |d| d + 1)
    }

    pub fn is_quantifier_free(&self) -> bool {
        match self {
            Formula::Quant(..) => false,
            _ => self.children().into_iter().all(Formula::is_quantifier_free),
        }
    }

    pub fn is_constant_free(&self) -> bool {
        match self {
            Formula::Const(_) => false,
            _ => self.children().into_iter().all(Formula::is_constant_free),
        }
    }

    /// True if any node satisfies `pred`.
    pub fn any_node(&self, pred: &impl Fn(&Formula) -> bool) -> bool {
        pred(self) || self.children().into_iter().any(|c| c.any_node(pred))
    }

    /// Atoms not bound by an enclosing quantifier.
    pub fn free_atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        let mut bound = Vec::new();
        collect_free(self, &mut bound, &mut out);
        out
    }

    pub fn occurs_free(&self, atom: &str) -> bool {
        match self {
            Formula::Atom(a) => a == atom,
            Formula::Const(_) => false,
            Formula::Neg(x) => x.occurs_free(atom),
            Formula::Binary(_, l, r) => l.occurs_free(atom) || r.occurs_free(atom),
            Formula::Quant(_, v, body) => v != atom && body.occurs_free(atom),
        }
    }

    /// Every atom name occurring anywhere, free or bound, including binder names.
    pub fn all_names(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.walk_names(&mut out);
        out
    }

    fn walk_names(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Atom(a) => {
                out.insert(a.clone());
            }
            Formula::Const(_) => {}
            Formula::Neg(x) => x.walk_names(out),
            Formula::Binary(_, l, r) => {
                l.walk_names(out);
                r.walk_names(out);
            }
            Formula::Quant(_, v, body) => {
                out.insert(v.clone());
                body.walk_names(out);
            }
        }
    }

    /// Replace every free occurrence of `atom` by `replacement`, renaming
    /// binders that would capture a free atom of the replacement.
    pub fn substitute(&self, atom: &str, replacement: &Formula) -> Formula {
        let repl_free = replacement.free_atoms();
        self.subst_inner(atom, replacement, &repl_free)
    }

    fn subst_inner(&self, atom: &str, replacement: &Formula, repl_free: &BTreeSet<String>) -> Formula {
        match self {
            Formula::Atom(a) if a == atom => replacement.clone(),
            Formula::Atom(_) | Formula::Const(_) => self.clone(),
            Formula::Neg(x) => Formula::neg(x.subst_inner(atom, replacement, repl_free)),
            Formula::Binary(op, l, r) => Formula::binary(
                *op,
                l.subst_inner(atom, replacement, repl_free),
                r.subst_inner(atom, replacement, repl_free),
            ),
            Formula::Quant(q, v, body) => {
                if v == atom || !body.occurs_free(atom) {
                    return self.clone();
                }
                if repl_free.contains(v) {
                    let mut used = body.all_names();
                    used.extend(repl_free.iter().cloned());
                    used.insert(atom.to_string());
                    let fresh = fresh_name(v, &used);
                    let renamed = body.subst_inner(v, &Formula::Atom(fresh.clone()), &BTreeSet::from([fresh.clone()]));
                    Formula::Quant(*q, fresh, Box::new(renamed.subst_inner(atom, replacement, repl_free)))
                } else {
                    Formula::Quant(*q, v.clone(), Box::new(body.subst_inner(atom, replacement, repl_free)))
                }
            }
        }
    }

    /// Equality up to consistent renaming of bound variables.
    pub fn alpha_eq(&self, other: &Formula) -> bool {
        alpha_eq_in(self, other, &mut Vec::new())
    }

    /// All valid positions in pre-order, the root first.
    pub fn positions(&self) -> Vec<Position> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        self.collect_positions(&mut path, &mut out);
        out
    }

    fn collect_positions(&self, path: &mut Vec<usize>, out: &mut Vec<Position>) {
        out.push(Position(path.clone()));
        for (i, c) in self.children().into_iter().enumerate() {
            path.push(i);
            c.collect_positions(path, out);
            path.pop();
        }
    }

    pub fn at(&self, pos: &Position) -> Option<&Formula> {
        let mut cur = self;
        for &i in &pos.0 {
            cur = *cur.children().get(i)?;
        }
        Some(cur)
    }

    /// Copy of `self` with the subformula at `pos` replaced. `None` if `pos` is invalid.
    pub fn replace_at(&self, pos: &Position, g: Formula) -> Option<Formula> {
        self.replace_path(&pos.0, g)
    }

    fn replace_path(&self, path: &[usize], g: Formula) -> Option<Formula> {
        let Some((&first, rest)) = path.split_first() else {
            return Some(g);
        };
        Some(match (self, first) {
            (Formula::Neg(x), 0) => Formula::neg(x.replace_path(rest, g)?),
            (Formula::Quant(q, v, x), 0) => Formula::Quant(*q, v.clone(), Box::new(x.replace_path(rest, g)?)),
            (Formula::Binary(op, l, r), 0) => Formula::binary(*op, l.replace_path(rest, g)?, (**r).clone()),
            (Formula::Binary(op, l, r), 1) => Formula::binary(*op, (**l).clone(), r.replace_path(rest, g)?),
            _ => return None,
        })
    }
}

fn collect_free(f: &Formula, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
    match f {
        Formula::Atom(a) => {
            if !bound.iter().any(|b| b == a) {
                out.insert(a.clone());
            }
        }
        Formula::Const(_) => {}
        Formula::Neg(x) => collect_free(x, bound, out),
        Formula::Binary(_, l, r) => {
            collect_free(l, bound, out);
            collect_free(r, bound, out);
        }
        Formula::Quant(_, v, body) => {
            bound.push(v.clone());
            collect_free(body, bound, out);
            bound.pop();
        }
    }
}

fn alpha_eq_in<'a>(a: &'a Formula, b: &'a Formula, env: &mut Vec<(&'a str, &'a str)>) -> bool {
    match (a, b) {
        (Formula::Atom(x), Formula::Atom(y)) => {
            let bx = env.iter().rev().find(|(l, _)| l == x);
            let by = env.iter().rev().find(|(_, r)| r == y);
            match (bx, by) {
                (Some((_, ry)), Some((lx, _))) => ry == y && lx == x,
                (None, None) => x == y,
                _ => false,
            }
        }
        (Formula::Const(x), Formula::Const(y)) => x == y,
        (Formula::Neg(x), Formula::Neg(y)) => alpha_eq_in(x, y, env),
        (Formula::Binary(o1, l1, r1), Formula::Binary(o2, l2, r2)) => {
            o1 == o2 && alpha_eq_in(l1, l2, env) && alpha_eq_in(r1, r2, env)
        }
        (Formula::Quant(q1, v1, x), Formula::Quant(q2, v2, y)) => {
            if q1 != q2 {
                return false;
            }
            env.push((v1, v2));
            let eq = alpha_eq_in(x, y, env);
            env.pop();
            eq
        }
        _ => false,
    }
}

/// `base` followed by the smallest positive integer not in `used`.
pub fn fresh_name(base: &str, used: &BTreeSet<String>) -> String {
    (1u64..)
        .map(|k| format!("{base}{k}"))
        .find(|n| !used.contains(n))
        .expect("unbounded search")
}

/// A path of child indices from the root.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Position(pub Vec<usize>);

impl Position {
    pub fn root() -> Position {
        Position(Vec::new())
    }

    pub fn child(&self, i: usize) -> Position {
        let mut p = self.0.clone();
        p.push(i);
        Position(p)
    }
}
