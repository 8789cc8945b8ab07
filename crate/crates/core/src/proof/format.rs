use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::semantics::Logic;
use crate::syntax::{parse, Formula, ParseError};

/// Logics the checker has rule sets for.
pub const PROOF_LOGICS: [&str; 5] = ["FDE+cmi", "K3+cmi", "LP+cmi", "M+cmi", "CL"];

macro_rules! rules {
    ($($variant:ident => $name:literal,)*) => {
        /// Inference rules of the natural deduction system.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum RuleName {
            $($variant,)*
        }

        impl RuleName {
            pub const ALL: &'static [RuleName] = &[$(RuleName::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(RuleName::$variant => $name,)*
                }
            }
        }

        impl FromStr for RuleName {
            type Err = ();

            fn from_str(s: &str) -> Result<Self, ()> {
                match s {
                    $($name => Ok(RuleName::$variant),)*
                    _ => Err(()),
                }
            }
        }
    };
}

rules! {
    Premise => "premise",
    Hyp => "hyp",
    Reit => "reit",
    AndI => "andI",
    AndE1 => "andE1",
    AndE2 => "andE2",
    OrI1 => "orI1",
    OrI2 => "orI2",
    OrE => "orE",
    ArrI => "arrI",
    ArrE => "arrE",
    DnI => "dnI",
    DnE => "dnE",
    NorI => "norI",
    NorE1 => "norE1",
    NorE2 => "norE2",
    NandI1 => "nandI1",
    NandI2 => "nandI2",
    NandE => "nandE",
    NarrI => "narrI",
    NarrE1 => "narrE1",
    NarrE2 => "narrE2",
    Dilemma => "dilemma",
    Efq => "efq",
    Lem => "lem",
    Mingle => "mingle",
}

impl RuleName {
    /// Whether the rule belongs to the rule set of `logic`.
    pub fn available_in(self, logic: &str) -> bool {
        match self {
            RuleName::Efq => matches!(logic, "K3+cmi" | "CL"),
            RuleName::Lem => matches!(logic, "LP+cmi" | "CL"),
            RuleName::Mingle => logic == "M+cmi",
            _ => PROOF_LOGICS.contains(&logic),
        }
    }
}

impl fmt::Display for RuleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A citation: one step, or a whole subproof by its first and last ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ref {
    Step(u32),
    Range(u32, u32),
}

impl Ref {
    fn last(self) -> u32 {
        match self {
            Ref::Step(i) | Ref::Range(_, i) => i,
        }
    }
}

impl fmt::Display for Ref {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ref::Step(i) => write!(f, "{i}"),
            Ref::Range(a, b) => write!(f, "{a}-{b}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub id: u32,
    pub formula: Formula,
    pub rule: RuleName,
    pub refs: Vec<Ref>,
    /// Source line, 1-based.
    pub line: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subproof {
    pub hypothesis: Step,
    pub body: Vec<Item>,
}

impl Subproof {
    /// Id of the last step inside, at any depth.
    pub fn last_id(&self) -> u32 {
        self.body.last().map_or(self.hypothesis.id, Item::last_id)
    }

    /// The last step at this subproof's own level.
    pub fn conclusion(&self) -> Option<&Step> {
        match self.body.last() {
            None => Some(&self.hypothesis),
            Some(Item::Step(s)) => Some(s),
            Some(Item::Subproof(_)) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Item {
    Step(Step),
    Subproof(Subproof),
}

impl Item {
    pub fn first_id(&self) -> u32 {
        match self {
            Item::Step(s) => s.id,
            Item::Subproof(sp) => sp.hypothesis.id,
        }
    }

    pub fn last_id(&self) -> u32 {
        match self {
            Item::Step(s) => s.id,
            Item::Subproof(sp) => sp.last_id(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Proof {
    pub logic: &'static Logic,
    pub premises: Vec<Step>,
    pub body: Vec<Item>,
    /// Ids named by `// expect-fail: <id>` comments.
    pub expect_fail: Vec<u32>,
}

impl Proof {
    /// The last top-level step.
    pub fn conclusion(&self) -> Option<&Step> {
        match self.body.last() {
            Some(Item::Step(s)) => Some(s),
            _ => None,
        }
    }

    /// Every step in document order, with its nesting depth.
    pub fn steps(&self) -> Vec<(usize, &Step)> {
        fn walk<'a>(items: &'a [Item], depth: usize, out: &mut Vec<(usize, &'a Step)>) {
            for item in items {
                match item {
                    Item::Step(s) => out.push((depth, s)),
                    Item::Subproof(sp) => {
                        out.push((depth + 1, &sp.hypothesis));
                        walk(&sp.body, depth + 1, out);
                    }
                }
            }
        }
        let mut out: Vec<(usize, &Step)> = self.premises.iter().map(|s| (0, s)).collect();
        walk(&self.body, 0, &mut out);
        out
    }
}

/// The file format, with ids, formulas and citations in canonical form.
impl fmt::Display for Proof {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "logic: {}", self.logic.name())?;
        for id in &self.expect_fail {
            writeln!(f, "// expect-fail: {id}")?;
        }
        for s in &self.premises {
            writeln!(f, "premise {} {}", s.id, s.formula)?;
        }
        for (depth, s) in self.steps().into_iter().skip(self.premises.len()) {
            let indent = "  ".repeat(depth);
            write!(f, "{indent}{} {} {}", s.id, s.formula, s.rule)?;
            if !s.refs.is_empty() {
                let refs: Vec<String> = s.refs.iter().map(Ref::to_string).collect();
                write!(f, " {}", refs.join(","))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProofError {
    #[error("line {line}: expected `logic: <name>` as the first line")]
    MissingLogic { line: usize },
    #[error("line {line}: no proof rules for logic `{name}` (supported: {})", PROOF_LOGICS.join(", "))]
    UnsupportedLogic { line: usize, name: String },
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: bad formula: {source}")]
    Formula { line: usize, source: ParseError },
    #[error("line {line}: inconsistent indentation: {message}")]
    Indentation { line: usize, message: String },
    #[error("line {line}: step id {id} does not exceed the previous id {previous}")]
    IdOrder { line: usize, id: u32, previous: u32 },
    #[error("line {line}: step {id} cites {cited}, which does not precede it")]
    ForwardReference { line: usize, id: u32, cited: String },
}

fn malformed(line: usize, message: impl Into<String>) -> ProofError {
    ProofError::Malformed {
        line,
        message: message.into(),
    }
}

fn parse_refs(text: &str, line: usize) -> Result<Vec<Ref>, ProofError> {
    text.split(',')
        .map(|part| {
            let part = part.trim();
            let num = |s: &str| {
                s.trim()
                    .parse::<u32>()
                    .map_err(|_| malformed(line, format!("bad citation `{part}`")))
            };
            match part.split_once('-') {
                Some((a, b)) => Ok(Ref::Range(num(a)?, num(b)?)),
                None => Ok(Ref::Step(num(part)?)),
            }
        })
        .collect()
}

/// Splits `<id> <formula> <rule> [<refs>]`. The rule is the rightmost
/// token naming a rule; everything after it is the citation list.
fn parse_step(text: &str, line: usize) -> Result<Step, ProofError> {
    let (id_text, rest) = text
        .split_once(char::is_whitespace)
        .ok_or_else(|| malformed(line, "expected `<id> <formula> <rule> [<refs>]`"))?;
    let id: u32 = id_text
        .parse()
        .map_err(|_| malformed(line, format!("bad step id `{id_text}`")))?;
    let tokens: Vec<(usize, &str)> = rest
        .split_whitespace()
        .map(|t| (t.as_ptr() as usize - rest.as_ptr() as usize, t))
        .collect();
    let (k, rule) = tokens
        .iter()
        .enumerate()
        .rev()
        .find_map(|(k, (_, t))| t.parse::<RuleName>().ok().map(|r| (k, r)))
        .ok_or_else(|| malformed(line, "no rule name"))?;
    let formula_text = &rest[..tokens[k].0];
    let refs_text: String = tokens[k + 1..].iter().map(|(_, t)| *t).collect();
    let refs = if refs_text.is_empty() {
        Vec::new()
    } else {
        parse_refs(&refs_text, line)?
    };
    if formula_text.trim().is_empty() {
        return Err(malformed(line, "missing formula"));
    }
    let formula = parse(formula_text).map_err(|source| ProofError::Formula { line, source })?;
    Ok(Step {
        id,
        formula,
        rule,
        refs,
        line,
    })
}

/// An open subproof during parsing.
struct Open {
    hypothesis: Step,
    body: Vec<Item>,
}

fn close(stack: &mut Vec<Open>, top: &mut Vec<Item>) {
    let open = stack.pop().expect("a subproof is open");
    let item = Item::Subproof(Subproof {
        hypothesis: open.hypothesis,
        body: open.body,
    });
    match stack.last_mut() {
        Some(parent) => parent.body.push(item),
        None => top.push(item),
    }
}

pub fn parse_proof(text: &str) -> Result<Proof, ProofError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let mut expect_fail = Vec::new();
    let mut comment = |l: &str| {
        if let Some(rest) = l.trim().strip_prefix("//") {
            if let Some(id) = rest.trim().strip_prefix("expect-fail:") {
                if let Ok(id) = id.trim().parse() {
                    expect_fail.push(id);
                }
            }
            true
        } else {
            l.trim().is_empty()
        }
    };

    let logic = loop {
        let Some((n, l)) = lines.next() else {
            return Err(ProofError::MissingLogic { line: 1 });
        };
        if comment(l) {
            continue;
        }
        let name = l
            .trim()
            .strip_prefix("logic:")
            .ok_or(ProofError::MissingLogic { line: n })?
            .trim();
        let logic = Logic::named(name).map_err(|_| ProofError::UnsupportedLogic {
            line: n,
            name: name.to_string(),
        })?;
        if !PROOF_LOGICS.contains(&logic.name()) {
            return Err(ProofError::UnsupportedLogic {
                line: n,
                name: name.to_string(),
            });
        }
        break logic;
    };

    let mut premises = Vec::new();
    let mut top: Vec<Item> = Vec::new();
    let mut stack: Vec<Open> = Vec::new();
    let mut previous: Option<u32> = None;
    let mut seen_step = false;

    for (n, raw) in lines {
        if comment(raw) {
            continue;
        }
        if raw.contains('\t') {
            return Err(ProofError::Indentation {
                line: n,
                message: "tabs are not allowed".into(),
            });
        }
        let spaces = raw.len() - raw.trim_start().len();
        if spaces % 2 != 0 {
            return Err(ProofError::Indentation {
                line: n,
                message: "odd number of leading spaces".into(),
            });
        }
        let depth = spaces / 2;
        let text = raw.trim();

        let is_premise = text.starts_with("premise ");
        let step = if let Some(rest) = text.strip_prefix("premise ") {
            if seen_step || depth != 0 {
                return Err(malformed(n, "premises must come first, unindented"));
            }
            let rest = rest.trim();
            let (id_text, f) = rest
                .split_once(char::is_whitespace)
                .ok_or_else(|| malformed(n, "expected `premise <id> <formula>`"))?;
            let id = id_text
                .parse()
                .map_err(|_| malformed(n, format!("bad step id `{id_text}`")))?;
            let formula = parse(f).map_err(|source| ProofError::Formula { line: n, source })?;
            Step {
                id,
                formula,
                rule: RuleName::Premise,
                refs: Vec::new(),
                line: n,
            }
        } else {
            seen_step = true;
            parse_step(text, n)?
        };

        if let Some(p) = previous {
            if step.id <= p {
                return Err(ProofError::IdOrder {
                    line: n,
                    id: step.id,
                    previous: p,
                });
            }
        }
        previous = Some(step.id);
        if let Some(r) = step.refs.iter().find(|r| r.last() >= step.id) {
            return Err(ProofError::ForwardReference {
                line: n,
                id: step.id,
                cited: r.to_string(),
            });
        }

        if is_premise {
            premises.push(step);
            continue;
        }

        let current = stack.len();
        if step.rule == RuleName::Hyp {
            if depth == 0 {
                return Err(ProofError::Indentation {
                    line: n,
                    message: "a hypothesis must be indented".into(),
                });
            }
            if depth > current + 1 {
                return Err(ProofError::Indentation {
                    line: n,
                    message: "indented more than one level".into(),
                });
            }
            // Close down to the parent of the new subproof.
            while stack.len() >= depth {
                close(&mut stack, &mut top);
            }
            stack.push(Open {
                hypothesis: step,
                body: Vec::new(),
            });
        } else {
            if depth > current {
                return Err(ProofError::Indentation {
                    line: n,
                    message: "deeper indentation must open with `hyp`".into(),
                });
            }
            while stack.len() > depth {
                close(&mut stack, &mut top);
            }
            match stack.last_mut() {
                Some(open) => open.body.push(Item::Step(step)),
                None => top.push(Item::Step(step)),
            }
        }
    }
    while !stack.is_empty() {
        close(&mut stack, &mut top);
    }
    Ok(Proof {
        logic,
        premises,
        body: top,
        expect_fail,
    })
}
