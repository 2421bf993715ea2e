use std::collections::BTreeMap;
use std::fmt;

use crate::aft::Pair;
use crate::lang::{Dataset, GroundAtom, GroundMetricAtom, GroundRule};
use crate::temporal::{IntervalSet, Time};

static NOWHERE: IntervalSet = IntervalSet::EMPTY;

/// Assigns each ground atom the set of timepoints where it holds. Atoms
/// without an entry hold nowhere; empty extensions are never stored, so
/// structural equality is semantic equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interpretation {
    map: BTreeMap<GroundAtom, IntervalSet>,
}

impl Interpretation {
    pub fn new() -> Self { Interpretation::default() }

    pub fn get(&self, atom: &GroundAtom) -> &IntervalSet { self.map.get(atom).unwrap_or(&NOWHERE) }

    /// Replaces the extension of `atom`.
    pub fn set(&mut self, atom: GroundAtom, s: IntervalSet) {
        if s.is_empty() {
            self.map.remove(&atom);
        } else {
            self.map.insert(atom, s);
        }
    }

    /// Adds `s` to the extension of `atom`.
    pub fn add(&mut self, atom: &GroundAtom, s: &IntervalSet) {
        if s.is_empty() {
            return;
        }
        match self.map.get_mut(atom) {
            Some(cur) => *cur = cur.union(s),
            None => {
                self.map.insert(atom.clone(), s.clone());
            }
        }
    }

    pub fn holds(&self, atom: &GroundAtom, t: Time) -> bool { self.get(atom).contains(t) }

    /// Atoms with a non-empty extension, in order.
    pub fn iter(&self) -> impl Iterator<Item = (&GroundAtom, &IntervalSet)> { self.map.iter() }

    pub fn is_empty(&self) -> bool { self.map.is_empty() }

    pub fn len(&self) -> usize { self.map.len() }

    pub fn is_subset(&self, other: &Interpretation) -> bool {
        self.map.iter().all(|(a, s)| s.is_subset(other.get(a)))
    }

    pub fn union(&self, other: &Interpretation) -> Interpretation {
        let mut out = self.clone();
        for (a, s) in &other.map {
            out.add(a, s);
        }
        out
    }

    pub fn intersect(&self, other: &Interpretation) -> Interpretation {
        let mut out = Interpretation::new();
        for (a, s) in &self.map {
            out.set(a.clone(), s.intersect(other.get(a)));
        }
        out
    }

    pub fn difference(&self, other: &Interpretation) -> Interpretation {
        let mut out = Interpretation::new();
        for (a, s) in &self.map {
            out.set(a.clone(), s.difference(other.get(a)));
        }
        out
    }

    /// The least interpretation satisfying every fact.
    pub fn from_dataset(d: &Dataset) -> Interpretation {
        let mut out = Interpretation::new();
        for f in &d.facts {
            out.add(&f.atom, &IntervalSet::single(f.interval));
        }
        out
    }

    pub fn satisfies_dataset(&self, d: &Dataset) -> bool {
        d.facts.iter().all(|f| IntervalSet::single(f.interval).is_subset(self.get(&f.atom)))
    }

    /// Largest magnitude among the finite endpoints of all extensions.
    pub fn max_finite_magnitude(&self) -> Time {
        self.map.values().map(IntervalSet::max_finite_magnitude).max().unwrap_or(0)
    }
}

impl FromIterator<(GroundAtom, IntervalSet)> for Interpretation {
    fn from_iter<T: IntoIterator<Item = (GroundAtom, IntervalSet)>>(iter: T) -> Self {
        let mut out = Interpretation::new();
        for (a, s) in iter {
            out.add(&a, &s);
        }
        out
    }
}

/// `(lo, hi)`: atoms in `lo` are true, atoms in `hi` but not `lo` are
/// undefined, the rest are false. Consistent when `lo ⊆ hi`.
pub type ThreeValuedInterpretation = Pair<Interpretation>;

/// Truth values ordered `False < Undef < True`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TruthValue3 {
    False,
    Undef,
    True,
}

impl TruthValue3 {
    /// Reads the pair of two-valued verdicts under `lo` and `hi`.
    ///
    /// Panics on `(true, false)`, which a consistent pair cannot produce.
    pub fn from_pair(lo: bool, hi: bool) -> TruthValue3 {
        match (lo, hi) {
            (true, true) => TruthValue3::True,
            (false, true) => TruthValue3::Undef,
            (false, false) => TruthValue3::False,
            (true, false) => panic!("inconsistent pair: true under the lower bound, false under the upper"),
        }
    }

    pub fn negate(self) -> TruthValue3 {
        match self {
            TruthValue3::False => TruthValue3::True,
            TruthValue3::Undef => TruthValue3::Undef,
            TruthValue3::True => TruthValue3::False,
        }
    }

    pub fn meet(self, other: TruthValue3) -> TruthValue3 { self.min(other) }

    /// Precision order: undef below both classical values.
    pub fn precision_leq(self, other: TruthValue3) -> bool { self == TruthValue3::Undef || self == other }
}

impl From<bool> for TruthValue3 {
    fn from(b: bool) -> Self { if b { TruthValue3::True } else { TruthValue3::False } }
}

impl fmt::Display for TruthValue3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TruthValue3::False => "false",
            TruthValue3::Undef => "undef",
            TruthValue3::True => "true",
        })
    }
}

/// Borrowed view of a conjunction of literals.
#[derive(Clone, Copy, Debug)]
pub struct Body<'a> {
    pub positive: &'a [GroundMetricAtom],
    pub negative: &'a [GroundMetricAtom],
}

impl<'a> Body<'a> {
    pub fn new(positive: &'a [GroundMetricAtom], negative: &'a [GroundMetricAtom]) -> Self { Body { positive, negative } }

    pub fn of(rule: &'a GroundRule) -> Self { Body { positive: &rule.positive, negative: &rule.negative } }

    pub fn empty() -> Body<'static> { Body { positive: &[], negative: &[] } }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::temporal::Interval;

    #[test]
    fn empty_extensions_are_not_stored() {
        let p = GroundAtom::prop("P");
        let mut i = Interpretation::new();
        i.set(p.clone(), IntervalSet::empty());
        assert_eq!(i, Interpretation::new());
        i.add(&p, &Interval::closed(0, 1).into());
        i.add(&p, &Interval::closed(2, 3).into());
        assert_eq!(i.get(&p), &IntervalSet::single(Interval::closed(0, 3)));
        assert_eq!(i.intersect(&Interpretation::new()), Interpretation::new());
    }

    #[test]
    fn truth_order() {
        use TruthValue3::*;
        assert!(False < Undef && Undef < True);
        assert_eq!(Undef.negate(), Undef);
        assert_eq!(True.meet(Undef), Undef);
        assert_eq!(TruthValue3::from_pair(false, true), Undef);
        assert!(Undef.precision_leq(True) && !True.precision_leq(False));
    }

    #[test]
    #[should_panic]
    fn inconsistent_pair_panics() { TruthValue3::from_pair(true, false); }
}
