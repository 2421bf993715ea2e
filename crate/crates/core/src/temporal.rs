//! Integer-timeline intervals and canonical interval sets.
//!
//! Every finite endpoint is stored closed: on ℤ an open endpoint `(a` is the
//! same set as `[a+1`. Infinite endpoints are always open. An [`IntervalSet`]
//! keeps its members sorted, disjoint and separated by at least one missing
//! integer, so structural equality coincides with equality of the denoted
//! sets of timepoints.
//!
//! The metric operators of the language are realised here as set
//! transformations: dilations for the diamonds, erosions for the boxes, and
//! dedicated sweeps for since/until. Future-facing operators are computed by
//! reflecting the timeline around 0 and reusing the past-facing code.

use std::cmp::{max, min, Ordering};
use std::fmt;

use thiserror::Error;

/// A single point of the integer timeline.
pub type Time = i64;

/// Largest magnitude accepted for a finite endpoint written in source text.
///
/// Metric operators add interval endpoints together; keeping literals well
/// below `i64::MAX` leaves room for deep nesting without overflow.
pub const TIME_LIMIT: Time = 1_000_000_000_000_000;

/// An endpoint: a finite integer or one of the two infinities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TimeBound {
    NegInf,
    Finite(Time),
    PosInf,
}

impl TimeBound {
    pub fn is_finite(self) -> bool { matches!(self, TimeBound::Finite(_)) }

    pub fn finite(self) -> Option<Time> {
        match self {
            TimeBound::Finite(t) => Some(t),
            _ => None,
        }
    }

    fn succ(self) -> TimeBound {
        match self {
            TimeBound::Finite(t) => TimeBound::Finite(t + 1),
            b => b,
        }
    }

    fn pred(self) -> TimeBound {
        match self {
            TimeBound::Finite(t) => TimeBound::Finite(t - 1),
            b => b,
        }
    }

    fn neg(self) -> TimeBound {
        match self {
            TimeBound::NegInf => TimeBound::PosInf,
            TimeBound::PosInf => TimeBound::NegInf,
            TimeBound::Finite(t) => TimeBound::Finite(-t),
        }
    }

    /// `self + offset` where `offset` is an endpoint of a non-negative interval.
    ///
    /// `-inf` absorbs everything; otherwise `+inf` on either side wins.
    fn plus(self, offset: TimeBound) -> TimeBound {
        match (self, offset) {
            (TimeBound::NegInf, _) => TimeBound::NegInf,
            (TimeBound::PosInf, _) | (_, TimeBound::PosInf) => TimeBound::PosInf,
            (TimeBound::Finite(a), TimeBound::Finite(b)) => TimeBound::Finite(a + b),
            (TimeBound::Finite(_), TimeBound::NegInf) => TimeBound::NegInf,
        }
    }

    /// `self - offset` for a finite offset.
    fn minus(self, offset: Time) -> TimeBound {
        match self {
            TimeBound::Finite(a) => TimeBound::Finite(a - offset),
            b => b,
        }
    }
}

impl fmt::Display for TimeBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TimeBound::NegInf => write!(f, "-inf"),
            TimeBound::PosInf => write!(f, "+inf"),
            TimeBound::Finite(t) => write!(f, "{t}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum IntervalError {
    #[error("interval {0} is empty on the integer timeline")]
    Empty(String),
    #[error("infinite endpoint {0} must use an open bracket")]
    ClosedInfinity(TimeBound),
}

/// A non-empty convex set of integers, stored in canonical closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    lo: TimeBound,
    hi: TimeBound,
}

impl Interval {
    /// Builds an interval from bracketed endpoints, normalising open finite
    /// endpoints to closed ones.
    pub fn new(lo: TimeBound, lo_closed: bool, hi: TimeBound, hi_closed: bool) -> Result<Interval, IntervalError> {
        if lo_closed && !lo.is_finite() {
            return Err(IntervalError::ClosedInfinity(lo));
        }
        if hi_closed && !hi.is_finite() {
            return Err(IntervalError::ClosedInfinity(hi));
        }
        let shown = || {
            format!(
                "{}{},{}{}",
                if lo_closed { '[' } else { '(' },
                lo,
                hi,
                if hi_closed { ']' } else { ')' }
            )
        };
        let lo_n = if lo_closed { lo } else { lo.succ() };
        let hi_n = if hi_closed { hi } else { hi.pred() };
        if lo_n == TimeBound::PosInf || hi_n == TimeBound::NegInf || lo_n > hi_n {
            return Err(IntervalError::Empty(shown()));
        }
        Ok(Interval { lo: lo_n, hi: hi_n })
    }

    /// `[a,b]`. Panics if `a > b`.
    pub fn closed(a: Time, b: Time) -> Interval {
        assert!(a <= b, "empty interval [{a},{b}]");
        Interval { lo: TimeBound::Finite(a), hi: TimeBound::Finite(b) }
    }

    pub fn point(t: Time) -> Interval { Interval::closed(t, t) }

    pub fn full() -> Interval { Interval { lo: TimeBound::NegInf, hi: TimeBound::PosInf } }

    /// `[a,+inf)`
    pub fn from(a: Time) -> Interval { Interval { lo: TimeBound::Finite(a), hi: TimeBound::PosInf } }

    /// `(-inf,b]`
    pub fn until(b: Time) -> Interval { Interval { lo: TimeBound::NegInf, hi: TimeBound::Finite(b) } }

    /// Canonical interval from closed bounds, `None` when empty.
    fn from_bounds(lo: TimeBound, hi: TimeBound) -> Option<Interval> {
        if lo == TimeBound::PosInf || hi == TimeBound::NegInf || lo > hi {
            None
        } else {
            Some(Interval { lo, hi })
        }
    }

    pub fn lo(&self) -> TimeBound { self.lo }

    pub fn hi(&self) -> TimeBound { self.hi }

    pub fn lo_closed(&self) -> bool { self.lo.is_finite() }

    pub fn hi_closed(&self) -> bool { self.hi.is_finite() }

    pub fn contains(&self, t: Time) -> bool {
        self.lo <= TimeBound::Finite(t) && TimeBound::Finite(t) <= self.hi
    }

    /// True when every member is `>= 0`.
    pub fn is_non_negative(&self) -> bool { self.lo >= TimeBound::Finite(0) }

    pub fn is_bounded(&self) -> bool { self.lo.is_finite() && self.hi.is_finite() }

    /// Lower endpoint of a non-negative interval as an integer.
    fn min_offset(&self) -> Time {
        self.lo.finite().expect("metric interval must be non-negative")
    }

    fn reflect(&self) -> Interval { Interval { lo: self.hi.neg(), hi: self.lo.neg() } }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let open = if self.lo_closed() { '[' } else { '(' };
        let close = if self.hi_closed() { ']' } else { ')' };
        write!(f, "{open}{},{}{close}", self.lo, self.hi)
    }
}

/// Canonical finite union of integer intervals.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntervalSet {
    items: Vec<Interval>,
}

impl IntervalSet {
    pub const EMPTY: IntervalSet = IntervalSet { items: Vec::new() };

    pub fn empty() -> IntervalSet { IntervalSet { items: Vec::new() } }

    pub fn full() -> IntervalSet { IntervalSet { items: vec![Interval::full()] } }

    pub fn single(iv: Interval) -> IntervalSet { IntervalSet { items: vec![iv] } }

    /// Normalises an arbitrary collection of intervals.
    pub fn from_intervals<I: IntoIterator<Item = Interval>>(intervals: I) -> IntervalSet {
        let mut items: Vec<Interval> = intervals.into_iter().collect();
        items.sort();
        let mut out: Vec<Interval> = Vec::with_capacity(items.len());
        for iv in items {
            match out.last_mut() {
                Some(last) if iv.lo <= last.hi.succ() => {
                    last.hi = max(last.hi, iv.hi);
                }
                _ => out.push(iv),
            }
        }
        IntervalSet { items: out }
    }

    /// Set of the given integer points.
    pub fn from_points<I: IntoIterator<Item = Time>>(points: I) -> IntervalSet {
        IntervalSet::from_intervals(points.into_iter().map(Interval::point))
    }

    pub fn intervals(&self) -> &[Interval] { &self.items }

    pub fn is_empty(&self) -> bool { self.items.is_empty() }

    pub fn is_full(&self) -> bool { self.items.len() == 1 && self.items[0] == Interval::full() }

    pub fn contains(&self, t: Time) -> bool {
        let probe = TimeBound::Finite(t);
        self.items
            .binary_search_by(|iv| {
                if iv.hi < probe {
                    Ordering::Less
                } else if iv.lo > probe {
                    Ordering::Greater
                } else {
                    Ordering::Equal
                }
            })
            .is_ok()
    }

    /// Smallest lower and largest upper endpoint.
    pub fn hull(&self) -> Option<Interval> {
        match (self.items.first(), self.items.last()) {
            (Some(a), Some(b)) => Some(Interval { lo: a.lo, hi: b.hi }),
            _ => None,
        }
    }

    /// Number of integer points, `None` if unbounded.
    pub fn cardinality(&self) -> Option<u64> {
        let mut total = 0u64;
        for iv in &self.items {
            match (iv.lo, iv.hi) {
                (TimeBound::Finite(a), TimeBound::Finite(b)) => total += (b - a) as u64 + 1,
                _ => return None,
            }
        }
        Some(total)
    }

    pub fn union(&self, other: &IntervalSet) -> IntervalSet {
        if other.is_empty() {
            return self.clone();
        }
        if self.is_empty() {
            return other.clone();
        }
        IntervalSet::from_intervals(self.items.iter().chain(other.items.iter()).copied())
    }

    pub fn intersect(&self, other: &IntervalSet) -> IntervalSet {
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < self.items.len() && j < other.items.len() {
            let (a, b) = (self.items[i], other.items[j]);
            if let Some(iv) = Interval::from_bounds(max(a.lo, b.lo), min(a.hi, b.hi)) {
                out.push(iv);
            }
            if a.hi < b.hi {
                i += 1;
            } else {
                j += 1;
            }
        }
        // pieces of canonical inputs are already sorted and separated
        IntervalSet { items: out }
    }

    pub fn complement(&self) -> IntervalSet {
        let mut out = Vec::with_capacity(self.items.len() + 1);
        let mut cursor = TimeBound::NegInf;
        for iv in &self.items {
            if let Some(gap) = Interval::from_bounds(cursor, iv.lo.pred()) {
                out.push(gap);
            }
            cursor = iv.hi.succ();
        }
        if let Some(tail) = Interval::from_bounds(cursor, TimeBound::PosInf) {
            out.push(tail);
        }
        IntervalSet { items: out }
    }

    pub fn difference(&self, other: &IntervalSet) -> IntervalSet { self.intersect(&other.complement()) }

    pub fn is_subset(&self, other: &IntervalSet) -> bool { self.difference(other).is_empty() }

    /// `{ -t | t ∈ self }`
    pub fn reflect(&self) -> IntervalSet {
        IntervalSet { items: self.items.iter().rev().map(Interval::reflect).collect() }
    }

    /// `{ t | ∃ t' ∈ s, t - t' ∈ δ }`: the Minkowski sum `s ⊕ δ`.
    pub fn dilate_past(&self, delta: &Interval) -> IntervalSet {
        debug_assert!(delta.is_non_negative());
        IntervalSet::from_intervals(
            self.items
                .iter()
                .filter_map(|iv| Interval::from_bounds(iv.lo.plus(delta.lo), iv.hi.plus(delta.hi))),
        )
    }

    /// `{ t | ∃ t' ∈ s, t' - t ∈ δ }`
    pub fn dilate_future(&self, delta: &Interval) -> IntervalSet { self.reflect().dilate_past(delta).reflect() }

    /// `{ t | ∀ t', t - t' ∈ δ ⇒ t' ∈ s }`
    pub fn erode_past(&self, delta: &Interval) -> IntervalSet {
        debug_assert!(delta.is_non_negative());
        // [t-δhi, t-δlo] ⊆ [a,b]  ⇔  t ∈ [a+δhi, b+δlo]; a window of consecutive
        // integers never straddles a gap of a canonical set
        let lo_off = TimeBound::Finite(delta.min_offset());
        IntervalSet::from_intervals(
            self.items
                .iter()
                .filter_map(|iv| Interval::from_bounds(iv.lo.plus(delta.hi), iv.hi.plus(lo_off))),
        )
    }

    /// `{ t | ∀ t', t' - t ∈ δ ⇒ t' ∈ s }`
    pub fn erode_future(&self, delta: &Interval) -> IntervalSet { self.reflect().erode_past(delta).reflect() }

    /// Since: `{ t | ∃ t' ∈ rhs, t - t' ∈ δ, and every integer of (t', t) is in lhs }`.
    pub fn since(lhs: &IntervalSet, rhs: &IntervalSet, delta: &Interval) -> IntervalSet {
        debug_assert!(delta.is_non_negative());
        let dlo = delta.min_offset();
        let dlo_b = TimeBound::Finite(dlo);
        let mut pieces = Vec::new();

        // witnesses t' whose successor t'+1 lies in a run [c,d] of lhs: every
        // t up to d+1 sees only lhs points strictly in between
        for run in &lhs.items {
            let reach = run.hi.succ();
            let window = match Interval::from_bounds(run.lo.pred(), run.hi.pred()) {
                Some(w) => IntervalSet::single(w),
                None => continue,
            };
            for seg in rhs.intersect(&window).items {
                let last = min(seg.hi, reach.minus(dlo));
                if seg.lo > last {
                    continue;
                }
                let upper = min(reach, last.plus(delta.hi));
                if let Some(iv) = Interval::from_bounds(seg.lo.plus(dlo_b), upper) {
                    pieces.push(iv);
                }
            }
        }

        // witnesses whose successor is outside lhs can only reach t' and t'+1
        if dlo <= 1 {
            let outside = lhs.complement().shift(-1);
            let step = min(TimeBound::Finite(1), delta.hi);
            for seg in rhs.intersect(&outside).items {
                if let Some(iv) = Interval::from_bounds(seg.lo.plus(dlo_b), seg.hi.plus(step)) {
                    pieces.push(iv);
                }
            }
        }
        IntervalSet::from_intervals(pieces)
    }

    /// Until: `{ t | ∃ t' ∈ rhs, t' - t ∈ δ, and every integer of (t, t') is in lhs }`.
    pub fn until(lhs: &IntervalSet, rhs: &IntervalSet, delta: &Interval) -> IntervalSet {
        IntervalSet::since(&lhs.reflect(), &rhs.reflect(), delta).reflect()
    }

    /// Translation by a finite amount.
    pub fn shift(&self, by: Time) -> IntervalSet {
        IntervalSet {
            items: self
                .items
                .iter()
                .map(|iv| Interval { lo: iv.lo.plus(TimeBound::Finite(by)), hi: iv.hi.plus(TimeBound::Finite(by)) })
                .collect(),
        }
    }

    /// Largest magnitude among finite endpoints, 0 for sets without any.
    pub fn max_finite_magnitude(&self) -> Time {
        self.items
            .iter()
            .flat_map(|iv| [iv.lo.finite(), iv.hi.finite()])
            .flatten()
            .map(|t| t.abs())
            .max()
            .unwrap_or(0)
    }

    /// Checks the canonical-form invariants. Used by tests and debug assertions.
    pub fn is_canonical(&self) -> bool {
        self.items.iter().all(|iv| Interval::from_bounds(iv.lo, iv.hi).is_some())
            && self.items.windows(2).all(|w| w[0].hi.succ() < w[1].lo)
    }
}

impl From<Interval> for IntervalSet {
    fn from(iv: Interval) -> Self { IntervalSet::single(iv) }
}

impl FromIterator<Interval> for IntervalSet {
    fn from_iter<T: IntoIterator<Item = Interval>>(iter: T) -> Self { IntervalSet::from_intervals(iter) }
}

/// `;`-joined member intervals, `{}` for the empty set.
impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.items.is_empty() {
            return write!(f, "{{}}");
        }
        for (i, iv) in self.items.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "{iv}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(ivs: &[(Time, Time)]) -> IntervalSet { ivs.iter().map(|&(a, b)| Interval::closed(a, b)).collect() }

    /// Membership on `window` decided directly from the quantifier form.
    fn pointwise<F: Fn(Time) -> bool>(window: (Time, Time), pred: F) -> Vec<Time> {
        (window.0..=window.1).filter(|&t| pred(t)).collect()
    }

    fn members(s: &IntervalSet, window: (Time, Time)) -> Vec<Time> { pointwise(window, |t| s.contains(t)) }

    #[test]
    fn normalisation_of_open_endpoints() {
        let iv = Interval::new(TimeBound::Finite(0), false, TimeBound::Finite(5), true).unwrap();
        assert_eq!(iv, Interval::closed(1, 5));
        let iv = Interval::new(TimeBound::NegInf, false, TimeBound::Finite(3), false).unwrap();
        assert_eq!(iv, Interval::until(2));
        assert!(matches!(
            Interval::new(TimeBound::Finite(1), false, TimeBound::Finite(2), false),
            Err(IntervalError::Empty(_))
        ));
        assert!(matches!(
            Interval::new(TimeBound::NegInf, true, TimeBound::Finite(2), true),
            Err(IntervalError::ClosedInfinity(_))
        ));
        assert_eq!(Interval::full().to_string(), "(-inf,+inf)");
        assert_eq!(Interval::from(3).to_string(), "[3,+inf)");
    }

    #[test]
    fn contains_examples() {
        assert!(set(&[(0, 5)]).contains(3));
        assert!(!IntervalSet::empty().contains(0));
        assert!(IntervalSet::full().contains(-1_000_000));
    }

    #[test]
    fn boolean_examples() {
        let u = set(&[(0, 2)]).union(&set(&[(3, 5)]));
        assert_eq!(u, set(&[(0, 5)]));
        assert_eq!(members(&u, (-1, 6)), (0..=5).collect::<Vec<_>>());
        assert_eq!(set(&[(0, 5)]).intersect(&set(&[(3, 9)])), set(&[(3, 5)]));
        assert_eq!(IntervalSet::full().complement(), IntervalSet::empty());
        assert_eq!(IntervalSet::empty().complement(), IntervalSet::full());
        assert_eq!(
            set(&[(0, 2), (5, 6)]).complement(),
            IntervalSet::from_intervals([Interval::until(-1), Interval::closed(3, 4), Interval::from(7)])
        );
    }

    #[test]
    fn dilation_examples() {
        let d = Interval::closed(0, 6);
        let r = set(&[(8, 8)]).dilate_past(&d);
        assert_eq!(r, set(&[(8, 14)]));
        assert_eq!(members(&r, (0, 20)), pointwise((0, 20), |t| (0..=6).any(|k| t - k == 8)));
        assert_eq!(IntervalSet::empty().dilate_past(&d), IntervalSet::empty());
        assert_eq!(set(&[(0, 1), (10, 10)]).dilate_past(&Interval::closed(2, 3)), set(&[(2, 4), (12, 13)]));

        assert_eq!(set(&[(8, 8)]).dilate_future(&d), set(&[(2, 8)]));
        assert_eq!(IntervalSet::empty().dilate_future(&d), IntervalSet::empty());
        assert_eq!(IntervalSet::full().dilate_future(&Interval::point(1)), IntervalSet::full());
    }

    #[test]
    fn erosion_examples() {
        let s = set(&[(0, 10)]);
        let r = s.erode_past(&Interval::closed(1, 2));
        assert_eq!(r, set(&[(2, 11)]));
        assert_eq!(members(&r, (-5, 20)), pointwise((-5, 20), |t| (1..=2).all(|k| s.contains(t - k))));
        assert_eq!(IntervalSet::full().erode_past(&Interval::closed(1, 2)), IntervalSet::full());
        assert_eq!(set(&[(0, 3)]).erode_past(&Interval::point(0)), set(&[(0, 3)]));

        assert_eq!(s.erode_future(&Interval::closed(1, 2)), set(&[(-1, 8)]));
        assert_eq!(IntervalSet::empty().erode_future(&Interval::closed(1, 2)), IntervalSet::empty());
        assert_eq!(set(&[(0, 3)]).erode_future(&Interval::point(0)), set(&[(0, 3)]));
        assert_eq!(set(&[(0, 3)]).erode_future(&Interval::from(0)), IntervalSet::empty());
        assert_eq!(
            IntervalSet::single(Interval::from(4)).erode_future(&Interval::from(2)),
            IntervalSet::single(Interval::from(2))
        );
    }

    #[test]
    fn since_examples() {
        assert_eq!(IntervalSet::since(&set(&[(1, 2)]), &set(&[(0, 0)]), &Interval::closed(0, 3)), set(&[(0, 3)]));
        assert_eq!(
            IntervalSet::since(&set(&[(1, 2)]), &IntervalSet::empty(), &Interval::closed(0, 3)),
            IntervalSet::empty()
        );
        // (5,6) holds no integer, so t = 6 is reached vacuously as well
        assert_eq!(
            IntervalSet::since(&IntervalSet::empty(), &set(&[(5, 5)]), &Interval::closed(0, 2)),
            set(&[(5, 6)])
        );
    }

    #[test]
    fn until_examples() {
        assert_eq!(IntervalSet::until(&set(&[(3, 4)]), &set(&[(5, 5)]), &Interval::closed(0, 3)), set(&[(2, 5)]));
        assert_eq!(
            IntervalSet::until(&set(&[(3, 4)]), &IntervalSet::empty(), &Interval::closed(0, 3)),
            IntervalSet::empty()
        );
        assert_eq!(
            IntervalSet::until(&IntervalSet::empty(), &set(&[(0, 0)]), &Interval::point(1)),
            set(&[(-1, -1)])
        );
    }

    #[test]
    fn display_and_cardinality() {
        let s = IntervalSet::from_intervals([Interval::until(-3), Interval::closed(0, 1)]);
        assert_eq!(s.to_string(), "(-inf,-3];[0,1]");
        assert_eq!(IntervalSet::empty().to_string(), "{}");
        assert_eq!(s.cardinality(), None);
        assert_eq!(set(&[(0, 1), (4, 4)]).cardinality(), Some(3));
    }
}
