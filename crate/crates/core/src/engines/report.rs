//! Serialized model reports:
//!
//! ```text
//! kind: well-founded
//! iterations: 4
//! exact: false
//! # true
//! ...
//! # undef
//! ...
//! ```
//!
//! Two-valued payloads are a plain interpretation dump after the header.

use std::fmt;
use std::str::FromStr;

use crate::aft::Pair;
use crate::lang::LangError;
use crate::semantics::dump::{read_interpretation, read_three_valued, write_interpretation, write_three_valued};
use crate::semantics::{Interpretation, ThreeValuedInterpretation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelKind {
    KripkeKleene,
    WellFounded,
    Supported,
    Stable3,
    Stable2,
    Ht,
    StableHt,
}

const KIND_NAMES: [(ModelKind, &str); 7] = [
    (ModelKind::KripkeKleene, "kripke-kleene"),
    (ModelKind::WellFounded, "well-founded"),
    (ModelKind::Supported, "supported"),
    (ModelKind::Stable3, "stable3"),
    (ModelKind::Stable2, "stable2"),
    (ModelKind::Ht, "ht"),
    (ModelKind::StableHt, "stable-ht"),
];

impl ModelKind {
    pub fn name(self) -> &'static str { KIND_NAMES.iter().find(|(k, _)| *k == self).map(|(_, n)| *n).unwrap() }

    fn two_valued(self) -> bool { matches!(self, ModelKind::Stable2 | ModelKind::StableHt) }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result { f.write_str(self.name()) }
}

impl FromStr for ModelKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        KIND_NAMES.iter().find(|(_, n)| *n == s).map(|(k, _)| *k).ok_or_else(|| format!("unknown model kind `{s}`"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelValue {
    Three(ThreeValuedInterpretation),
    Two(Interpretation),
}

impl ModelValue {
    pub fn as_pair(&self) -> ThreeValuedInterpretation {
        match self {
            ModelValue::Three(j) => j.clone(),
            ModelValue::Two(i) => Pair::exact(i.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelReport {
    pub kind: ModelKind,
    pub value: ModelValue,
    pub iterations: usize,
    pub exact: bool,
}

impl ModelReport {
    pub fn three(kind: ModelKind, j: ThreeValuedInterpretation, iterations: usize) -> Self {
        let exact = j.is_exact();
        ModelReport { kind, value: ModelValue::Three(j), iterations, exact }
    }

    pub fn two(kind: ModelKind, i: Interpretation, iterations: usize) -> Self {
        ModelReport { kind, value: ModelValue::Two(i), iterations, exact: true }
    }

    pub fn parse(text: &str) -> Result<ModelReport, LangError> {
        let bad = |line: usize, message: String| LangError::Syntax { line, col: 1, message };
        let mut lines = text.splitn(4, '\n');
        let mut field = |n: usize, key: &str| -> Result<String, LangError> {
            let line = lines.next().unwrap_or_default();
            line.strip_prefix(key)
                .and_then(|rest| rest.strip_prefix(": "))
                .map(str::to_owned)
                .ok_or_else(|| bad(n, format!("expected `{key}: ...`")))
        };
        let kind: ModelKind = field(1, "kind")?.parse().map_err(|e| bad(1, e))?;
        let iterations = field(2, "iterations")?.parse().map_err(|_| bad(2, "expected a count".into()))?;
        let exact = field(3, "exact")?.parse().map_err(|_| bad(3, "expected true or false".into()))?;
        let body = lines.next().unwrap_or_default();
        let value = if kind.two_valued() {
            ModelValue::Two(read_interpretation(body)?)
        } else {
            ModelValue::Three(read_three_valued(body)?)
        };
        Ok(ModelReport { kind, value, iterations, exact })
    }
}

impl fmt::Display for ModelReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "kind: {}", self.kind)?;
        writeln!(f, "iterations: {}", self.iterations)?;
        writeln!(f, "exact: {}", self.exact)?;
        match &self.value {
            ModelValue::Three(j) => f.write_str(&write_three_valued(j)),
            ModelValue::Two(i) => f.write_str(&write_interpretation(i)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lang::GroundAtom;
    use crate::temporal::{Interval, IntervalSet};

    #[test]
    fn reports_round_trip() {
        let mut hi = Interpretation::new();
        hi.set(GroundAtom::prop("P"), IntervalSet::full());
        let r = ModelReport::three(ModelKind::WellFounded, Pair::new(Interpretation::new(), hi), 3);
        let text = r.to_string();
        assert_eq!(text, "kind: well-founded\niterations: 3\nexact: false\n# true\n# undef\nP@(-inf,+inf)\n");
        assert_eq!(ModelReport::parse(&text).unwrap(), r);

        let mut i = Interpretation::new();
        i.set(GroundAtom::prop("Q"), Interval::closed(1, 2).into());
        let r = ModelReport::two(ModelKind::Stable2, i, 0);
        assert_eq!(ModelReport::parse(&r.to_string()).unwrap(), r);
        assert!(ModelReport::parse("kind: nope\n").is_err());
        for (k, n) in KIND_NAMES {
            assert_eq!(n.parse::<ModelKind>().unwrap(), k);
        }
    }
}
