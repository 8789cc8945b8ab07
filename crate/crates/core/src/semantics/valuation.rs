use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::{Logic, TruthValue};

/// A finite assignment of truth values to atoms.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Valuation(BTreeMap<String, TruthValue>);

impl Valuation {
    pub fn new() -> Valuation {
        Valuation::default()
    }

    pub fn get(&self, atom: &str) -> Option<TruthValue> {
        self.0.get(atom).copied()
    }

    pub fn set(&mut self, atom: impl Into<String>, v: TruthValue) {
        self.0.insert(atom.into(), v);
    }

    pub fn with(mut self, atom: impl Into<String>, v: TruthValue) -> Valuation {
        self.set(atom, v);
        self
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, TruthValue)> {
        self.0.iter().map(|(k, v)| (k.as_str(), *v))
    }

    pub fn values(&self) -> impl Iterator<Item = TruthValue> + '_ {
        self.0.values().copied()
    }

    /// Whether every value is in the logic's value set and the filter passes.
    pub fn admitted_by(&self, logic: &Logic) -> bool {
        self.values().all(|v| logic.admits(v)) && logic.filter().admits(self.values())
    }
}

impl<S: Into<String>> FromIterator<(S, TruthValue)> for Valuation {
    fn from_iter<I: IntoIterator<Item = (S, TruthValue)>>(iter: I) -> Self {
        Valuation(iter.into_iter().map(|(k, v)| (k.into(), v)).collect())
    }
}

/// `p=B q=F`, atoms in name order.
impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (atom, v) in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{atom}={v}")?;
        }
        Ok(())
    }
}

/// Iterator over all admitted valuations of a fixed atom list.
///
/// Order is lexicographic: the first atom varies slowest, values run
/// `T, B, N, F` restricted to the logic's value set.
pub struct Valuations<'a> {
    logic: &'a Logic,
    atoms: Vec<String>,
    digits: Vec<usize>,
    done: bool,
}

impl<'a> Valuations<'a> {
    pub fn new(logic: &'a Logic, atoms: &[String]) -> Valuations<'a> {
        Valuations {
            logic,
            atoms: atoms.to_vec(),
            digits: vec![0; atoms.len()],
            done: false,
        }
    }

    fn current(&self) -> Valuation {
        let values = self.logic.values();
        Valuation(
            self.atoms
                .iter()
                .zip(&self.digits)
                .map(|(a, &d)| (a.clone(), values[d]))
                .collect(),
        )
    }

    fn advance(&mut self) {
        let base = self.logic.values().len();
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if *d < base {
                return;
            }
            *d = 0;
        }
        self.done = true;
    }
}

impl Iterator for Valuations<'_> {
    type Item = Valuation;

    fn next(&mut self) -> Option<Valuation> {
        loop {
            if self.done {
                return None;
            }
            let values = self.logic.values();
            let ok = self.logic.filter().admits(self.digits.iter().map(|&d| values[d]));
            let v = ok.then(|| self.current());
            self.advance();
            if v.is_some() {
                return v;
            }
        }
    }
}

/// All admitted valuations over `atoms`, in enumeration order.
pub fn enumerate_valuations(logic: &Logic, atoms: &[String]) -> Vec<Valuation> {
    Valuations::new(logic, atoms).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use TruthValue::*;

    fn atoms(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn fde_single_atom() {
        let vs = enumerate_valuations(Logic::named("FDE").unwrap(), &atoms(&["p"]));
        assert_eq!(vs.len(), 4);
        assert_eq!(vs[0], Valuation::new().with("p", T));
        assert_eq!(vs[3], Valuation::new().with("p", F));
    }

    #[test]
    fn k3_two_atoms() {
        assert_eq!(
            enumerate_valuations(Logic::named("K3").unwrap(), &atoms(&["p", "q"])).len(),
            9
        );
    }

    #[test]
    fn m_two_atoms_counted_against_direct_filter() {
        let m = Logic::named("M").unwrap();
        let vs = enumerate_valuations(m, &atoms(&["p", "q"]));
        let oracle = TruthValue::ALL
            .iter()
            .flat_map(|a| TruthValue::ALL.iter().map(move |b| (*a, *b)))
            .filter(|(a, b)| !matches!((a, b), (B, N) | (N, B)))
            .count();
        assert_eq!(oracle, 14);
        assert_eq!(vs.len(), oracle);
        assert!(vs.iter().all(|v| v.admitted_by(m)));
    }

    #[test]
    fn order_is_lexicographic_in_given_atom_order() {
        let vs = enumerate_valuations(Logic::named("CL").unwrap(), &atoms(&["q", "p"]));
        let shown: Vec<String> = vs
            .iter()
            .map(|v| format!("{}{}", v.get("q").unwrap(), v.get("p").unwrap()))
            .collect();
        assert_eq!(shown, ["TT", "TF", "FT", "FF"]);
    }

    #[test]
    fn no_atoms_gives_one_empty_valuation() {
        let vs = enumerate_valuations(Logic::named("FDE").unwrap(), &[]);
        assert_eq!(vs, vec![Valuation::new()]);
    }

    #[test]
    fn display() {
        let v = Valuation::new().with("q", F).with("p", B);
        assert_eq!(v.to_string(), "p=B q=F");
    }
}
