use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::interop::{expand, DefinitionSet};
use crate::semantics::{check_language, eval_unchecked, EvalError, TruthValue, Valuation, Valuations};
use crate::syntax::{BinaryOp, Formula};

use super::format::{Item, Proof, Ref, RuleName, Step, Subproof};

/// Verdict for one step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepDiagnostic {
    pub id: u32,
    pub rule: String,
    pub ok: bool,
    pub message: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub logic: &'static str,
    pub accepted: bool,
    pub steps: Vec<StepDiagnostic>,
}

impl CheckReport {
    pub fn failures(&self) -> impl Iterator<Item = &StepDiagnostic> {
        self.steps.iter().filter(|s| !s.ok)
    }

    pub fn first_failure(&self) -> Option<u32> {
        self.failures().next().map(|s| s.id)
    }
}

/// One line per step, then `accepted` or `rejected`.
impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            match &s.message {
                None => writeln!(f, "{} ok {}", s.id, s.rule)?,
                Some(m) => writeln!(f, "{} FAIL {}: {m}", s.id, s.rule)?,
            }
        }
        writeln!(f, "{}", if self.accepted { "accepted" } else { "rejected" })
    }
}

/// Formulas are compared with `>>`, `=>`, `<->` and `<=>` unfolded.
fn normal(f: &Formula, defs: &DefinitionSet) -> Formula {
    expand(f, defs)
}

#[derive(Debug, Clone)]
enum Entry {
    Formula(u32, Formula),
    Subproof {
        first: u32,
        last: u32,
        hyp: Formula,
        conclusion: Option<Formula>,
    },
}

/// What a citation resolved to.
#[derive(Debug, Clone)]
enum Cited {
    Formula(Formula),
    Subproof(Formula, Formula),
}

struct Checker {
    logic: &'static str,
    defs: DefinitionSet,
    /// Bodies from the outermost to the innermost open one.
    scopes: Vec<Vec<Entry>>,
    /// Every id seen so far.
    seen: BTreeSet<u32>,
    out: Vec<StepDiagnostic>,
}

fn fail<T>(message: impl Into<String>) -> Result<T, String> {
    Err(message.into())
}

impl Checker {
    fn resolve(&self, r: Ref) -> Result<Cited, String> {
        match r {
            Ref::Step(id) => {
                for scope in self.scopes.iter().rev() {
                    for e in scope {
                        if let Entry::Formula(i, f) = e {
                            if *i == id {
                                return Ok(Cited::Formula(f.clone()));
                            }
                        }
                    }
                }
                if self.seen.contains(&id) {
                    fail(format!("step {id} is not accessible here"))
                } else {
                    fail(format!("no step {id}"))
                }
            }
            Ref::Range(a, b) => {
                let here = self.scopes.last().expect("a scope is open");
                for e in here {
                    if let Entry::Subproof {
                        first,
                        last,
                        hyp,
                        conclusion,
                    } = e
                    {
                        if (*first, *last) == (a, b) {
                            return match conclusion {
                                Some(c) => Ok(Cited::Subproof(hyp.clone(), c.clone())),
                                None => fail(format!("subproof {a}-{b} ends in a subproof, not a step")),
                            };
                        }
                    }
                }
                fail(format!("{a}-{b} is not a closed subproof at this level"))
            }
        }
    }

    fn step(&mut self, s: &Step) {
        let result = self.judge(s);
        self.seen.insert(s.id);
        let f = normal(&s.formula, &self.defs);
        self.scopes
            .last_mut()
            .expect("a scope is open")
            .push(Entry::Formula(s.id, f));
        self.out.push(StepDiagnostic {
            id: s.id,
            rule: s.rule.name().to_string(),
            ok: result.is_ok(),
            message: result.err(),
        });
    }

    fn judge(&self, s: &Step) -> Result<(), String> {
        if !s.rule.available_in(self.logic) {
            return fail(format!("rule {} not available in logic {}", s.rule, self.logic));
        }
        let cited = s.refs.iter().map(|r| self.resolve(*r)).collect::<Result<Vec<_>, _>>()?;
        let goal = normal(&s.formula, &self.defs);
        apply_rule(s.rule, &goal, &cited)
    }

    fn subproof(&mut self, sp: &Subproof) {
        let hyp = &sp.hypothesis;
        let result = if hyp.refs.is_empty() {
            Ok(())
        } else {
            fail("a hypothesis cites nothing")
        };
        self.seen.insert(hyp.id);
        let hf = normal(&hyp.formula, &self.defs);
        self.out.push(StepDiagnostic {
            id: hyp.id,
            rule: hyp.rule.name().to_string(),
            ok: result.is_ok(),
            message: result.err(),
        });
        self.scopes.push(vec![Entry::Formula(hyp.id, hf.clone())]);
        self.items(&sp.body);
        self.scopes.pop();
        let conclusion = sp.conclusion().map(|c| normal(&c.formula, &self.defs));
        self.scopes.last_mut().expect("a scope is open").push(Entry::Subproof {
            first: hyp.id,
            last: sp.last_id(),
            hyp: hf,
            conclusion,
        });
    }

    fn items(&mut self, items: &[Item]) {
        for item in items {
            match item {
                Item::Step(s) => self.step(s),
                Item::Subproof(sp) => self.subproof(sp),
            }
        }
    }
}

fn neg(f: &Formula) -> Option<&Formula> {
    match f {
        Formula::Neg(x) => Some(x),
        _ => None,
    }
}

fn bin(op: BinaryOp, f: &Formula) -> Option<(&Formula, &Formula)> {
    match f {
        Formula::Binary(o, l, r) if *o == op => Some((l, r)),
        _ => None,
    }
}

fn same(a: &Formula, b: &Formula) -> bool {
    a.alpha_eq(b)
}

fn formulas<const N: usize>(rule: RuleName, cited: &[Cited]) -> Result<[&Formula; N], String> {
    let fs: Vec<&Formula> = cited
        .iter()
        .filter_map(|c| match c {
            Cited::Formula(f) => Some(f),
            Cited::Subproof(..) => None,
        })
        .collect();
    if fs.len() != cited.len() || fs.len() != N {
        return fail(format!("{rule} cites exactly {N} step(s) and no subproofs"));
    }
    Ok(fs.try_into().expect("length checked"))
}

/// Hypothesis and last line of a cited subproof.
type Span<'a> = (&'a Formula, &'a Formula);

/// One formula and two subproofs, in any citation order.
fn case_split<'a>(rule: RuleName, cited: &'a [Cited]) -> Result<(&'a Formula, [Span<'a>; 2]), String> {
    let mut major = None;
    let mut subs = Vec::new();
    for c in cited {
        match c {
            Cited::Formula(f) if major.is_none() => major = Some(f),
            Cited::Subproof(h, k) => subs.push((h, k)),
            _ => return fail(format!("{rule} cites one step and two subproofs")),
        }
    }
    match (major, subs.as_slice()) {
        (Some(m), [a, b]) => Ok((m, [*a, *b])),
        _ => fail(format!("{rule} cites one step and two subproofs")),
    }
}

fn two_subproofs(rule: RuleName, cited: &[Cited]) -> Result<[(&Formula, &Formula); 2], String> {
    match cited {
        [Cited::Subproof(h1, c1), Cited::Subproof(h2, c2)] => Ok([(h1, c1), (h2, c2)]),
        _ => fail(format!("{rule} cites exactly two subproofs")),
    }
}

/// Checks that the two subproofs are `a ... goal` and `b ... goal` in some order.
fn cases(goal: &Formula, subs: [(&Formula, &Formula); 2], a: &Formula, b: &Formula) -> Result<(), String> {
    for (h, c) in subs {
        if !same(c, goal) {
            return fail(format!("subproof from {h} concludes {c}, not {goal}"));
        }
    }
    let [(h1, _), (h2, _)] = subs;
    if (same(h1, a) && same(h2, b)) || (same(h1, b) && same(h2, a)) {
        Ok(())
    } else {
        fail(format!("case hypotheses must be {a} and {b}"))
    }
}

fn expect(ok: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message())
    }
}

fn apply_rule(rule: RuleName, goal: &Formula, cited: &[Cited]) -> Result<(), String> {
    use RuleName::*;
    let shape = |what: &str| format!("{rule} needs {what}");
    match rule {
        Premise => fail("premises belong in `premise` lines"),
        Hyp => fail("hypotheses open subproofs"),
        Reit => {
            let [a] = formulas(rule, cited)?;
            expect(same(a, goal), || format!("cited formula is {a}, not {goal}"))
        }
        AndI => {
            let [a, b] = formulas(rule, cited)?;
            let (l, r) = bin(BinaryOp::And, goal).ok_or_else(|| shape("a conjunction"))?;
            expect((same(l, a) && same(r, b)) || (same(l, b) && same(r, a)), || {
                format!("{goal} is not the conjunction of {a} and {b}")
            })
        }
        AndE1 | AndE2 => {
            let [a] = formulas(rule, cited)?;
            let (l, r) = bin(BinaryOp::And, a).ok_or_else(|| shape("a cited conjunction"))?;
            let want = if rule == AndE1 { l } else { r };
            expect(same(want, goal), || format!("{rule} of {a} gives {want}, not {goal}"))
        }
        OrI1 | OrI2 => {
            let [a] = formulas(rule, cited)?;
            let (l, r) = bin(BinaryOp::Or, goal).ok_or_else(|| shape("a disjunction"))?;
            let side = if rule == OrI1 { l } else { r };
            expect(same(side, a), || {
                format!(
                    "{a} is not the {} disjunct of {goal}",
                    if rule == OrI1 { "left" } else { "right" }
                )
            })
        }
        OrE => {
            let (major, subs) = case_split(rule, cited)?;
            let (a, b) = bin(BinaryOp::Or, major).ok_or_else(|| shape("a cited disjunction"))?;
            cases(goal, subs, a, b)
        }
        ArrI => {
            let (h, c) = match cited {
                [Cited::Subproof(h, c)] => (h, c),
                _ => return fail("arrI cites exactly one subproof"),
            };
            let (a, b) = bin(BinaryOp::Arrow, goal).ok_or_else(|| shape("a conditional"))?;
            expect(same(a, h) && same(b, c), || {
                format!("subproof {h} ... {c} does not give {goal}")
            })
        }
        ArrE => {
            let [x, y] = formulas(rule, cited)?;
            let fits = |cond: &Formula, ante: &Formula| {
                bin(BinaryOp::Arrow, cond).is_some_and(|(a, b)| same(a, ante) && same(b, goal))
            };
            expect(fits(x, y) || fits(y, x), || {
                format!("{goal} does not follow by modus ponens from {x} and {y}")
            })
        }
        DnI => {
            let [a] = formulas(rule, cited)?;
            let inner = neg(goal).and_then(neg);
            expect(inner.is_some_and(|i| same(i, a)), || format!("{goal} is not ~~({a})"))
        }
        DnE => {
            let [a] = formulas(rule, cited)?;
            let inner = neg(a).and_then(neg).ok_or_else(|| shape("a cited double negation"))?;
            expect(same(inner, goal), || format!("{rule} of {a} gives {inner}, not {goal}"))
        }
        NorI => {
            let [x, y] = formulas(rule, cited)?;
            let (l, r) = neg(goal)
                .and_then(|g| bin(BinaryOp::Or, g))
                .ok_or_else(|| shape("a negated disjunction"))?;
            let (nx, ny) = (
                neg(x).ok_or_else(|| shape("negated premises"))?,
                neg(y).ok_or_else(|| shape("negated premises"))?,
            );
            expect((same(l, nx) && same(r, ny)) || (same(l, ny) && same(r, nx)), || {
                format!("{goal} does not combine {x} and {y}")
            })
        }
        NorE1 | NorE2 => {
            let [a] = formulas(rule, cited)?;
            let (l, r) = neg(a)
                .and_then(|g| bin(BinaryOp::Or, g))
                .ok_or_else(|| shape("a cited negated disjunction"))?;
            let want = Formula::neg(if rule == NorE1 { l.clone() } else { r.clone() });
            expect(same(&want, goal), || format!("{rule} of {a} gives {want}, not {goal}"))
        }
        NandI1 | NandI2 => {
            let [a] = formulas(rule, cited)?;
            let (l, r) = neg(goal)
                .and_then(|g| bin(BinaryOp::And, g))
                .ok_or_else(|| shape("a negated conjunction"))?;
            let side = if rule == NandI1 { l } else { r };
            expect(neg(a).is_some_and(|x| same(x, side)), || {
                format!("{a} is not ~({side})")
            })
        }
        NandE => {
            let (major, subs) = case_split(rule, cited)?;
            let (a, b) = neg(major)
                .and_then(|g| bin(BinaryOp::And, g))
                .ok_or_else(|| shape("a cited negated conjunction"))?;
            cases(goal, subs, &Formula::neg(a.clone()), &Formula::neg(b.clone()))
        }
        NarrI => {
            let [x, y] = formulas(rule, cited)?;
            let (a, b) = neg(goal)
                .and_then(|g| bin(BinaryOp::Arrow, g))
                .ok_or_else(|| shape("a negated conditional"))?;
            let fits = |p: &Formula, q: &Formula| same(p, a) && neg(q).is_some_and(|nq| same(nq, b));
            expect(fits(x, y) || fits(y, x), || format!("{goal} needs {a} and ~({b})"))
        }
        NarrE1 | NarrE2 => {
            let [x] = formulas(rule, cited)?;
            let (a, b) = neg(x)
                .and_then(|g| bin(BinaryOp::Arrow, g))
                .ok_or_else(|| shape("a cited negated conditional"))?;
            let want = if rule == NarrE1 {
                a.clone()
            } else {
                Formula::neg(b.clone())
            };
            expect(same(&want, goal), || format!("{rule} of {x} gives {want}, not {goal}"))
        }
        Dilemma => {
            let subs = two_subproofs(rule, cited)?;
            for (h, c) in subs {
                if !same(c, goal) {
                    return fail(format!("subproof from {h} concludes {c}, not {goal}"));
                }
            }
            let [(h1, _), (h2, _)] = subs;
            let fits = |a: &Formula, cond: &Formula| bin(BinaryOp::Arrow, cond).is_some_and(|(x, _)| same(x, a));
            expect(fits(h1, h2) || fits(h2, h1), || {
                format!("hypotheses {h1} and {h2} are not A and A -> C")
            })
        }
        Efq => {
            let [x, y] = formulas(rule, cited)?;
            let clash = |p: &Formula, q: &Formula| neg(q).is_some_and(|nq| same(nq, p));
            expect(clash(x, y) || clash(y, x), || {
                format!("{x} and {y} are not contradictory")
            })
        }
        Lem => {
            let [(h1, c1), (h2, c2)] = two_subproofs(rule, cited)?;
            for c in [c1, c2] {
                if !same(c, goal) {
                    return fail(format!("a case concludes {c}, not {goal}"));
                }
            }
            let clash = |p: &Formula, q: &Formula| neg(q).is_some_and(|nq| same(nq, p));
            expect(clash(h1, h2) || clash(h2, h1), || {
                format!("hypotheses {h1} and {h2} are not A and ~A")
            })
        }
        Mingle => {
            let [x] = formulas(rule, cited)?;
            let glut = bin(BinaryOp::And, x).is_some_and(|(a, na)| neg(na).is_some_and(|i| same(i, a)));
            let excluded = bin(BinaryOp::Or, goal).is_some_and(|(b, nb)| neg(nb).is_some_and(|i| same(i, b)));
            expect(glut && excluded, || format!("{rule} needs A & ~A and gives B | ~B"))
        }
    }
}

/// Checks every step against its rule and the accessibility discipline.
pub fn check_proof(p: &Proof) -> CheckReport {
    let mut c = Checker {
        logic: p.logic.name(),
        defs: DefinitionSet::connectives(),
        scopes: vec![Vec::new()],
        seen: BTreeSet::new(),
        out: Vec::new(),
    };
    for s in &p.premises {
        c.seen.insert(s.id);
        let f = normal(&s.formula, &c.defs);
        c.scopes[0].push(Entry::Formula(s.id, f));
        c.out.push(StepDiagnostic {
            id: s.id,
            rule: s.rule.name().to_string(),
            ok: true,
            message: None,
        });
    }
    c.items(&p.body);
    let mut accepted = c.out.iter().all(|d| d.ok);
    if p.conclusion().is_none() {
        accepted = false;
        c.out.push(StepDiagnostic {
            id: p.body.last().map_or(0, Item::last_id),
            rule: "end".to_string(),
            ok: false,
            message: Some("the proof must end with a top-level step".to_string()),
        });
    }
    CheckReport {
        logic: p.logic.name(),
        accepted,
        steps: c.out,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AuditError {
    #[error("proof is rejected by the checker; refusing to audit")]
    Rejected(CheckReport),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

/// A valuation designating every premise but not some top-level step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub step: u32,
    #[serde(serialize_with = "crate::serialize_display")]
    pub valuation: Valuation,
    pub value: TruthValue,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub logic: &'static str,
    pub valuations: usize,
    pub violation: Option<Violation>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.violation {
            None => writeln!(f, "sound over {} {} valuations", self.valuations, self.logic),
            Some(v) => writeln!(f, "violation at step {}: {} gives {}", v.step, v.valuation, v.value),
        }
    }
}

/// Sweeps every admitted valuation of the proof's atoms: whenever all
/// premises are designated, every top-level step must be designated.
pub fn soundness_audit(p: &Proof) -> Result<AuditReport, AuditError> {
    let report = check_proof(p);
    if !report.accepted {
        return Err(AuditError::Rejected(report));
    }
    let logic = p.logic;
    let top: Vec<&Step> = p
        .body
        .iter()
        .filter_map(|i| match i {
            Item::Step(s) => Some(s),
            Item::Subproof(_) => None,
        })
        .collect();
    let mut atoms = BTreeSet::new();
    for s in p.premises.iter().chain(top.iter().copied()) {
        check_language(logic, &s.formula)?;
        atoms.extend(s.formula.free_atoms());
    }
    let atoms: Vec<String> = atoms.into_iter().collect();
    let mut count = 0;
    for v in Valuations::new(logic, &atoms) {
        count += 1;
        if !p
            .premises
            .iter()
            .all(|s| logic.is_designated(eval_unchecked(logic, &s.formula, &v)))
        {
            continue;
        }
        for s in &top {
            let value = eval_unchecked(logic, &s.formula, &v);
            if !logic.is_designated(value) {
                return Ok(AuditReport {
                    logic: logic.name(),
                    valuations: count,
                    violation: Some(Violation {
                        step: s.id,
                        valuation: v,
                        value,
                    }),
                });
            }
        }
    }
    Ok(AuditReport {
        logic: logic.name(),
        valuations: count,
        violation: None,
    })
}
