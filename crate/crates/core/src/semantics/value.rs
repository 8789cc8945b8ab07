use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// One of the four Belnap–Dunn truth values.
///
/// Each value can be read as a subset of the classical values: `T = {t}`,
/// `B = {t, f}`, `N = {}`, `F = {f}`. In the truth order `F` is the bottom,
/// `T` the top, and `B` and `N` are incomparable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TruthValue {
    T,
    B,
    N,
    F,
}

impl TruthValue {
    /// Enumeration order.
    pub const ALL: [TruthValue; 4] = [TruthValue::T, TruthValue::B, TruthValue::N, TruthValue::F];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> TruthValue {
        TruthValue::ALL[i]
    }

    /// Whether the classical value "true" belongs to this value.
    pub fn has_true(self) -> bool {
        matches!(self, TruthValue::T | TruthValue::B)
    }

    /// Whether the classical value "false" belongs to this value.
    pub fn has_false(self) -> bool {
        matches!(self, TruthValue::B | TruthValue::F)
    }

    fn from_parts(has_true: bool, has_false: bool) -> TruthValue {
        match (has_true, has_false) {
            (true, false) => TruthValue::T,
            (true, true) => TruthValue::B,
            (false, false) => TruthValue::N,
            (false, true) => TruthValue::F,
        }
    }

    pub fn is_classical(self) -> bool {
        matches!(self, TruthValue::T | TruthValue::F)
    }

    /// Greatest lower bound in the truth order.
    pub fn meet(self, other: TruthValue) -> TruthValue {
        TruthValue::from_parts(
            self.has_true() && other.has_true(),
            self.has_false() || other.has_false(),
        )
    }

    /// Least upper bound in the truth order.
    pub fn join(self, other: TruthValue) -> TruthValue {
        TruthValue::from_parts(
            self.has_true() || other.has_true(),
            self.has_false() && other.has_false(),
        )
    }

    /// Order inversion: swaps `T` and `F`, fixes `B` and `N`.
    pub fn negate(self) -> TruthValue {
        TruthValue::from_parts(self.has_false(), self.has_true())
    }

    /// `self <= other` in the truth order.
    pub fn leq(self, other: TruthValue) -> bool {
        self.meet(other) == self
    }

    pub fn letter(self) -> char {
        match self {
            TruthValue::T => 'T',
            TruthValue::B => 'B',
            TruthValue::N => 'N',
            TruthValue::F => 'F',
        }
    }

    pub fn from_letter(c: char) -> Option<TruthValue> {
        match c.to_ascii_uppercase() {
            'T' => Some(TruthValue::T),
            'B' => Some(TruthValue::B),
            'N' => Some(TruthValue::N),
            'F' => Some(TruthValue::F),
            _ => None,
        }
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("`{0}` is not a truth value (expected one of T B N F)")]
pub struct BadTruthValue(pub String);

impl FromStr for TruthValue {
    type Err = BadTruthValue;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut chars = s.chars();
        match (chars.next().and_then(TruthValue::from_letter), chars.next()) {
            (Some(v), None) => Ok(v),
            _ => Err(BadTruthValue(s.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::TruthValue::{self, *};

    /// The Hasse diagram edges, written out independently of `meet`.
    fn below(a: TruthValue, b: TruthValue) -> bool {
        a == b || a == F || b == T
    }

    #[test]
    fn order_matches_diagram() {
        for a in TruthValue::ALL {
            for b in TruthValue::ALL {
                assert_eq!(a.leq(b), below(a, b), "{a} <= {b}");
            }
        }
        assert!(!B.leq(N) && !N.leq(B));
    }

    #[test]
    fn meet_and_join_are_bounds() {
        for a in TruthValue::ALL {
            for b in TruthValue::ALL {
                let m = a.meet(b);
                let j = a.join(b);
                assert!(below(m, a) && below(m, b));
                assert!(below(a, j) && below(b, j));
                for c in TruthValue::ALL {
                    if below(c, a) && below(c, b) {
                        assert!(below(c, m));
                    }
                    if below(a, c) && below(b, c) {
                        assert!(below(j, c));
                    }
                }
            }
        }
    }

    #[test]
    fn negation_and_de_morgan() {
        assert_eq!(TruthValue::ALL.map(TruthValue::negate), [F, B, N, T]);
        for a in TruthValue::ALL {
            assert_eq!(a.negate().negate(), a);
            for b in TruthValue::ALL {
                assert_eq!(a.meet(b).negate(), a.negate().join(b.negate()));
                assert_eq!(a.join(b).negate(), a.negate().meet(b.negate()));
            }
        }
    }

    #[test]
    fn both_and_neither_interact_surprisingly() {
        assert_eq!(B.meet(N), F);
        assert_eq!(B.join(N), T);
    }

    #[test]
    fn parse_letters() {
        assert_eq!("b".parse::<TruthValue>().unwrap(), B);
        assert!("X".parse::<TruthValue>().is_err());
        assert!("TT".parse::<TruthValue>().is_err());
    }
}
