use std::fmt;

use serde::Serialize;

use crate::consequence::{equivalent, equivalent_across, valid};
use crate::pool::{by_size, Grammar};
use crate::semantics::{EvalError, Logic};
use crate::syntax::{parse, Formula};

use super::translate::{translate, SchemeError, TranslationScheme};

/// Two logics with translations each way.
#[derive(Debug, Clone)]
pub struct SynonymPair {
    pub name: &'static str,
    pub left: &'static Logic,
    pub right: &'static Logic,
    /// From `left` to `right`.
    pub there: TranslationScheme,
    /// From `right` to `left`.
    pub back: TranslationScheme,
}

const PAIRS: [(&str, &str, &str, &str, &str); 2] = [
    ("k3-l3", "K3+cmi", "L3", "k3-l3", "l3-k3"),
    ("lp-rm3", "LP+cmi", "RM3", "lp-rm3", "rm3-lp"),
];

pub fn pair_names() -> Vec<&'static str> {
    PAIRS.iter().map(|p| p.0).collect()
}

impl SynonymPair {
    /// Accepts the short names `k3-l3` and `lp-rm3`, or `K3+cmi/L3` style.
    pub fn named(name: &str) -> Result<SynonymPair, SchemeError> {
        let (n, l, r, there, back) = PAIRS
            .iter()
            .find(|p| p.0.eq_ignore_ascii_case(name) || format!("{}/{}", p.1, p.2).eq_ignore_ascii_case(name))
            .ok_or_else(|| SchemeError::Unknown(name.to_string()))?;
        Ok(SynonymPair {
            name: n,
            left: Logic::named(l)?,
            right: Logic::named(r)?,
            there: TranslationScheme::builtin(there)?,
            back: TranslationScheme::builtin(back)?,
        })
    }
}

/// Outcome for one of the four translation conditions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionVerdict {
    pub condition: u8,
    /// Connective-by-connective table identity.
    pub schema: bool,
    /// Formulas of the enumerated pool that were checked.
    pub checked: usize,
    #[serde(serialize_with = "serialize_witness")]
    pub witness: Option<Formula>,
}

fn serialize_witness<S: serde::Serializer>(w: &Option<Formula>, s: S) -> Result<S::Ok, S::Error> {
    match w {
        Some(f) => s.collect_str(f),
        None => s.serialize_none(),
    }
}

impl ConditionVerdict {
    pub fn passed(&self) -> bool {
        self.schema && self.witness.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SynonymyReport {
    pub pair: &'static str,
    pub bound: usize,
    pub conditions: Vec<ConditionVerdict>,
}

impl SynonymyReport {
    pub fn passed(&self) -> bool {
        self.conditions.iter().all(ConditionVerdict::passed)
    }
}

impl fmt::Display for SynonymyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.conditions {
            let verdict = if c.passed() { "PASS" } else { "FAIL" };
            write!(f, "condition-{}: {verdict} bound={}", c.condition, self.bound)?;
            if let Some(w) = &c.witness {
                write!(f, " witness={w}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn schemas() -> Vec<Formula> {
    ["~p", "p & q", "p | q", "p -> q"]
        .iter()
        .map(|s| parse(s).expect("schema parses"))
        .collect()
}

/// Theorems of `from` translate to theorems of `to`.
fn preserves_theorems(
    condition: u8,
    from: &Logic,
    to: &Logic,
    scheme: &TranslationScheme,
    pool: &[Formula],
) -> Result<ConditionVerdict, EvalError> {
    // Same values, same designation and the same table for every translated
    // connective give the same table for every translated formula.
    let mut schema = from.values() == to.values() && from.designated() == to.designated();
    let mut witness = None;
    for s in schemas() {
        if !equivalent_across(from, &s, to, &translate(&s, scheme))? {
            schema = false;
            witness.get_or_insert(s);
        }
    }
    for f in pool {
        if witness.is_some() {
            break;
        }
        if valid(from, f)? && !valid(to, &translate(f, scheme))? {
            witness = Some(f.clone());
        }
    }
    Ok(ConditionVerdict {
        condition,
        schema,
        checked: pool.len(),
        witness,
    })
}

/// The round trip `back(there(f))` is equivalent to `f` in `home`.
fn round_trip(
    condition: u8,
    home: &Logic,
    there: &TranslationScheme,
    back: &TranslationScheme,
    pool: &[Formula],
) -> Result<ConditionVerdict, EvalError> {
    let trip = |f: &Formula| translate(&translate(f, there), back);
    let mut schema = true;
    let mut witness = None;
    for s in schemas() {
        if !equivalent(home, &trip(&s), &s)? {
            schema = false;
            witness.get_or_insert(s);
        }
    }
    for f in pool {
        if witness.is_some() {
            break;
        }
        if !equivalent(home, &trip(f), f)? {
            witness = Some(f.clone());
        }
    }
    Ok(ConditionVerdict {
        condition,
        schema,
        checked: pool.len(),
        witness,
    })
}

/// Checks the four conditions over every formula on `p`, `q` built from
/// `~`, `&`, `|`, `->` with at most `bound` nodes.
pub fn check_synonymy(pair: &SynonymPair, bound: usize) -> Result<SynonymyReport, EvalError> {
    let pool = by_size(&Grammar::with_arrow(&["p", "q"]), bound);
    let (l, r) = (pair.left, pair.right);
    let conditions = vec![
        preserves_theorems(1, l, r, &pair.there, &pool)?,
        preserves_theorems(2, r, l, &pair.back, &pool)?,
        round_trip(3, l, &pair.there, &pair.back, &pool)?,
        round_trip(4, r, &pair.back, &pair.there, &pool)?,
    ];
    Ok(SynonymyReport {
        pair: pair.name,
        bound,
        conditions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_pairs_pass_at_small_bound() {
        for name in pair_names() {
            let report = check_synonymy(&SynonymPair::named(name).unwrap(), 5).unwrap();
            assert!(report.passed(), "{name}\n{report}");
        }
    }

    #[test]
    fn report_lines() {
        let report = check_synonymy(&SynonymPair::named("K3+cmi/L3").unwrap(), 3).unwrap();
        assert_eq!(
            report.to_string(),
            "condition-1: PASS bound=3\ncondition-2: PASS bound=3\ncondition-3: PASS bound=3\ncondition-4: PASS bound=3\n"
        );
    }

    #[test]
    fn identity_scheme_fails_with_witness() {
        let mut pair = SynonymPair::named("k3-l3").unwrap();
        pair.there = TranslationScheme::from_template("id", "K3+cmi", "L3", "A -> B").unwrap();
        let report = check_synonymy(&pair, 3).unwrap();
        assert!(!report.passed());
        let c1 = &report.conditions[0];
        assert!(!c1.schema);
        assert_eq!(c1.witness, Some(parse("p -> q").unwrap()));
        assert!(report.to_string().contains("condition-1: FAIL bound=3 witness=p -> q"));
    }

    #[test]
    fn lukasiewicz_side_schema() {
        let l3 = Logic::named("L3").unwrap();
        assert!(equivalent(
            l3,
            &parse("(p -> (p -> q)) & (~q -> (~q -> ~p))").unwrap(),
            &parse("p -> q").unwrap()
        )
        .unwrap());
    }
}
