//! Formula generation: exhaustive enumeration by size or depth, pools
//! deduplicated by truth table, and a seeded random generator.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::semantics::{Logic, TruthValue, Valuations};
use crate::syntax::{BinaryOp, Constant, Formula};

/// The leaves and connectives formulas may be built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grammar {
    pub atoms: Vec<String>,
    pub constants: Vec<Constant>,
    pub negation: bool,
    pub binary: Vec<BinaryOp>,
}

impl Grammar {
    pub fn new(atoms: &[&str], negation: bool, binary: &[BinaryOp]) -> Grammar {
        Grammar {
            atoms: atoms.iter().map(|a| a.to_string()).collect(),
            constants: Vec::new(),
            negation,
            binary: binary.to_vec(),
        }
    }

    /// `~`, `&`, `|`.
    pub fn lattice(atoms: &[&str]) -> Grammar {
        Grammar::new(atoms, true, &[BinaryOp::And, BinaryOp::Or])
    }

    /// `~`, `&`, `|`, `->`.
    pub fn with_arrow(atoms: &[&str]) -> Grammar {
        Grammar::new(atoms, true, &[BinaryOp::And, BinaryOp::Or, BinaryOp::Arrow])
    }

    /// `&`, `|`, `->`, no negation.
    pub fn positive(atoms: &[&str]) -> Grammar {
        Grammar::new(atoms, false, &[BinaryOp::And, BinaryOp::Or, BinaryOp::Arrow])
    }

    pub fn constants(mut self, constants: &[Constant]) -> Grammar {
        self.constants = constants.to_vec();
        self
    }

    fn leaves(&self) -> Vec<Formula> {
        self.atoms
            .iter()
            .map(|a| Formula::atom(a.clone()))
            .chain(self.constants.iter().map(|c| Formula::constant(*c)))
            .collect()
    }
}

/// Every formula of exactly `size` nodes, grouped by size, for sizes `1..=max`.
fn by_exact_size(g: &Grammar, max: usize) -> Vec<Vec<Formula>> {
    let mut levels: Vec<Vec<Formula>> = vec![Vec::new(); max + 1];
    for n in 1..=max {
        let mut here = Vec::new();
        if n == 1 {
            here.extend(g.leaves());
        }
        if g.negation && n >= 2 {
            here.extend(levels[n - 1].iter().map(|f| Formula::neg(f.clone())));
        }
        if n >= 3 {
            for op in &g.binary {
                for left in 1..n - 1 {
                    let right = n - 1 - left;
                    for l in &levels[left] {
                        for r in &levels[right] {
                            here.push(Formula::binary(*op, l.clone(), r.clone()));
                        }
                    }
                }
            }
        }
        levels[n] = here;
    }
    levels
}

/// Every formula with at most `max` nodes, smaller formulas first.
pub fn by_size(g: &Grammar, max: usize) -> Vec<Formula> {
    by_exact_size(g, max).into_iter().flatten().collect()
}

/// Every formula with at most `max` binary-or-negation nodes.
pub fn by_connectives(g: &Grammar, max: usize) -> Vec<Formula> {
    let limit = if g.binary.is_empty() { max + 1 } else { 2 * max + 1 };
    by_size(g, limit)
        .into_iter()
        .filter(|f| f.connective_count() <= max)
        .collect()
}

/// Every formula of depth at most `max`, shallower formulas first.
pub fn by_depth(g: &Grammar, max: usize) -> Vec<Formula> {
    let mut all = g.leaves();
    let mut frontier_start = 0;
    for _ in 0..max {
        let old = all.len();
        let mut next = Vec::new();
        for (i, f) in all.iter().enumerate() {
            if g.negation && i >= frontier_start {
                next.push(Formula::neg(f.clone()));
            }
        }
        for op in &g.binary {
            for (i, l) in all.iter().enumerate() {
                for (j, r) in all.iter().enumerate() {
                    if i >= frontier_start || j >= frontier_start {
                        next.push(Formula::binary(*op, l.clone(), r.clone()));
                    }
                }
            }
        }
        all.extend(next);
        frontier_start = old;
    }
    all
}

/// One block of rows per logic: the admitted valuations of the atoms.
struct Rows<'a> {
    logics: Vec<(&'a Logic, usize)>,
    width: usize,
}

impl<'a> Rows<'a> {
    fn new(logics: &[&'a Logic], atoms: &[String]) -> (Rows<'a>, Vec<Vec<TruthValue>>) {
        let mut columns = vec![Vec::new(); atoms.len()];
        let mut blocks = Vec::new();
        let mut width = 0;
        for &logic in logics {
            let mut n = 0;
            for v in Valuations::new(logic, atoms) {
                for (col, a) in columns.iter_mut().zip(atoms) {
                    col.push(v.get(a).expect("valuation covers atoms"));
                }
                n += 1;
            }
            blocks.push((logic, n));
            width += n;
        }
        (Rows { logics: blocks, width }, columns)
    }

    fn pointwise(&self, f: impl Fn(&Logic, usize) -> TruthValue) -> Vec<TruthValue> {
        let mut out = Vec::with_capacity(self.width);
        let mut i = 0;
        for (logic, n) in &self.logics {
            for _ in 0..*n {
                out.push(f(logic, i));
                i += 1;
            }
        }
        out
    }
}

/// Representatives of every distinct joint truth table reachable within a
/// bound. Tables are computed compositionally; each representative is the
/// first formula found for its table, so it is minimal for the bound used.
#[derive(Debug, Clone)]
pub struct SemanticPool {
    /// Pairs of (table, representative) in discovery order.
    pub classes: Vec<(Vec<TruthValue>, Formula)>,
}

/// How a [`SemanticPool`] bounds its formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    Depth(usize),
    Connectives(usize),
}

impl SemanticPool {
    /// Tables are taken jointly over every logic in `logics`, each on its own
    /// admitted valuations of the grammar's atoms.
    pub fn build(logics: &[&Logic], g: &Grammar, bound: Bound) -> SemanticPool {
        let (rows, columns) = Rows::new(logics, &g.atoms);
        let mut index: HashMap<Vec<TruthValue>, usize> = HashMap::new();
        let mut classes: Vec<(Vec<TruthValue>, Formula)> = Vec::new();
        let mut add = |t: Vec<TruthValue>, f: &dyn Fn() -> Formula, classes: &mut Vec<(Vec<TruthValue>, Formula)>| {
            if !index.contains_key(&t) {
                index.insert(t.clone(), classes.len());
                classes.push((t, f()));
                true
            } else {
                false
            }
        };
        // `tiers[k]` ends the classes reachable within bound k.
        let mut tiers = Vec::new();
        for (i, a) in g.atoms.iter().enumerate() {
            let t = rows.pointwise(|_, r| columns[i][r]);
            add(t, &|| Formula::atom(a.clone()), &mut classes);
        }
        for c in &g.constants {
            let t = rows.pointwise(|_, _| c.value());
            add(t, &|| Formula::constant(*c), &mut classes);
        }
        tiers.push(classes.len());
        let limit = match bound {
            Bound::Depth(d) | Bound::Connectives(d) => d,
        };
        for k in 1..=limit {
            let before = classes.len();
            if g.negation {
                for i in 0..tiers[k - 1] {
                    let t = rows.pointwise(|l, r| l.neg_unchecked(classes[i].0[r]));
                    let f = classes[i].1.clone();
                    add(t, &|| Formula::neg(f.clone()), &mut classes);
                }
            }
            let pairs: Vec<(usize, usize)> = match bound {
                Bound::Depth(_) => {
                    let n = tiers[k - 1];
                    (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect()
                }
                Bound::Connectives(_) => (0..k)
                    .flat_map(|left| {
                        let right = k - 1 - left;
                        let (nl, nr) = (tiers[left], tiers[right]);
                        (0..nl).flat_map(move |i| (0..nr).map(move |j| (i, j)))
                    })
                    .collect(),
            };
            for op in &g.binary {
                for &(i, j) in &pairs {
                    let t = rows.pointwise(|l, r| l.binary_unchecked(*op, classes[i].0[r], classes[j].0[r]));
                    let (a, b) = (classes[i].1.clone(), classes[j].1.clone());
                    add(t, &|| Formula::binary(*op, a.clone(), b.clone()), &mut classes);
                }
            }
            tiers.push(classes.len());
            if classes.len() == before && matches!(bound, Bound::Depth(_)) {
                // Closed under the connectives: deeper levels add nothing.
                for _ in k + 1..=limit {
                    tiers.push(classes.len());
                }
                break;
            }
        }
        SemanticPool { classes }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn representatives(&self) -> impl Iterator<Item = &Formula> {
        self.classes.iter().map(|(_, f)| f)
    }
}

/// Seeded generator of random formulas over a grammar, up to a depth bound.
#[derive(Debug, Clone)]
pub struct RandomFormulas {
    rng: ChaCha8Rng,
    grammar: Grammar,
    max_depth: usize,
}

impl RandomFormulas {
    pub fn new(seed: u64, grammar: Grammar, max_depth: usize) -> RandomFormulas {
        assert!(
            !grammar.atoms.is_empty() || !grammar.constants.is_empty(),
            "grammar has no leaves"
        );
        RandomFormulas {
            rng: ChaCha8Rng::seed_from_u64(seed),
            grammar,
            max_depth,
        }
    }

    pub fn generate(&mut self) -> Formula {
        let depth = self.max_depth;
        self.node(depth)
    }

    fn node(&mut self, depth: usize) -> Formula {
        let leaves = self.grammar.atoms.len() + self.grammar.constants.len();
        let inner = usize::from(self.grammar.negation) + self.grammar.binary.len();
        // Stop early often enough that shallow formulas also show up.
        if depth == 0 || inner == 0 || self.rng.gen_bool(0.25) {
            let i = self.rng.gen_range(0..leaves);
            return match self.grammar.atoms.get(i) {
                Some(a) => Formula::atom(a.clone()),
                None => Formula::constant(self.grammar.constants[i - self.grammar.atoms.len()]),
            };
        }
        let pick = self.rng.gen_range(0..inner);
        if self.grammar.negation && pick == 0 {
            return Formula::neg(self.node(depth - 1));
        }
        let op = *self
            .grammar
            .binary
            .choose(&mut self.rng)
            .expect("binary connectives present");
        let l = self.node(depth - 1);
        let r = self.node(depth - 1);
        Formula::binary(op, l, r)
    }
}

impl Iterator for RandomFormulas {
    type Item = Formula;

    fn next(&mut self) -> Option<Formula> {
        Some(self.generate())
    }
}

/// A seeded random total table of the given arity.
pub fn random_table(rng: &mut ChaCha8Rng, arity: u32) -> Vec<TruthValue> {
    (0..4usize.pow(arity))
        .map(|_| TruthValue::from_index(rng.gen_range(0..4)))
        .collect()
}
