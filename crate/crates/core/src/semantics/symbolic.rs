//! Truth sets over the whole timeline, computed with interval-set algebra.

use super::interp::{Body, Interpretation, ThreeValuedInterpretation};
use crate::lang::GroundMetricAtom;
use crate::temporal::IntervalSet;

/// `{ t | M holds under I at t }`
pub fn eval2_set(m: &GroundMetricAtom, i: &Interpretation) -> IntervalSet {
    use GroundMetricAtom as M;
    match m {
        M::Top => IntervalSet::full(),
        M::Bottom => IntervalSet::empty(),
        M::Rel(a) => i.get(a).clone(),
        M::DiamondMinus(d, c) => eval2_set(c, i).dilate_past(d),
        M::DiamondPlus(d, c) => eval2_set(c, i).dilate_future(d),
        M::BoxMinus(d, c) => eval2_set(c, i).erode_past(d),
        M::BoxPlus(d, c) => eval2_set(c, i).erode_future(d),
        M::Since(l, d, r) => IntervalSet::since(&eval2_set(l, i), &eval2_set(r, i), d),
        M::Until(l, d, r) => IntervalSet::until(&eval2_set(l, i), &eval2_set(r, i), d),
    }
}

/// Where every positive literal holds under `pos` and every negated one
/// fails under `neg`.
fn mixed_body_set(body: Body<'_>, pos: &Interpretation, neg: &Interpretation) -> IntervalSet {
    let mut acc = IntervalSet::full();
    for m in body.positive {
        if acc.is_empty() {
            return acc;
        }
        acc = acc.intersect(&eval2_set(m, pos));
    }
    for m in body.negative {
        if acc.is_empty() {
            return acc;
        }
        acc = acc.difference(&eval2_set(m, neg));
    }
    acc
}

/// `{ t | the body holds under I at t }`
pub fn eval2_body_set(body: Body<'_>, i: &Interpretation) -> IntervalSet { mixed_body_set(body, i, i) }

/// Where the body is true, and where it is not false, under `J`.
///
/// A positive literal is true where it holds in `lo` and not false where it
/// holds in `hi`; a negated literal the other way round.
pub fn eval3_body_sets(body: Body<'_>, j: &ThreeValuedInterpretation) -> (IntervalSet, IntervalSet) {
    (mixed_body_set(body, &j.lo, &j.hi), mixed_body_set(body, &j.hi, &j.lo))
}

/// Body true under `here` for positive literals and `there` for negated ones.
pub(crate) fn body_set_with(body: Body<'_>, here: &Interpretation, there: &Interpretation) -> IntervalSet {
    mixed_body_set(body, here, there)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aft::Pair;
    use crate::lang::{parse_ground_metric_atom, GroundAtom};
    use crate::semantics::pointwise::{eval2_at, eval3_body_at};
    use crate::semantics::TruthValue3;
    use crate::temporal::{Interval, Time};

    fn atom(s: &str) -> GroundMetricAtom { parse_ground_metric_atom(s).unwrap() }

    #[test]
    fn examples() {
        let mut i = Interpretation::new();
        i.set(GroundAtom::new("Takes", vec!["John".into()]), Interval::point(8).into());
        let m = atom("diamondminus[0,6] Takes(John)");
        let s = eval2_set(&m, &i);
        assert_eq!(s, IntervalSet::single(Interval::closed(8, 14)));
        for t in 0..=20 {
            assert_eq!(s.contains(t), eval2_at(&m, &i, t));
        }
        assert!(eval2_set(&GroundMetricAtom::Bottom, &i).is_empty());
        let s = IntervalSet::from_intervals([Interval::closed(1, 2), Interval::from(9)]);
        i.set(GroundAtom::prop("P"), s.clone());
        assert_eq!(eval2_set(&atom("P"), &i), s);
    }

    #[test]
    fn three_valued_body_sets() {
        let mut hi = Interpretation::new();
        hi.set(GroundAtom::prop("Q"), IntervalSet::full());
        let j = Pair::new(Interpretation::new(), hi);
        let negq = [atom("Q")];
        let body = Body::new(&[], &negq);
        let (tr, nf) = eval3_body_sets(body, &j);
        assert_eq!((tr.clone(), nf.clone()), (IntervalSet::empty(), IntervalSet::full()));
        for t in -3..3 {
            assert_eq!(eval3_body_at(body, &j, t), TruthValue3::Undef);
            assert_eq!(tr.contains(t), eval3_body_at(body, &j, t) == TruthValue3::True);
        }

        let mut p = Interpretation::new();
        p.set(GroundAtom::prop("P"), Interval::closed(0, 3).into());
        let pos = [atom("P")];
        let (tr, nf) = eval3_body_sets(Body::new(&pos, &[]), &Pair::exact(p));
        assert_eq!(tr, IntervalSet::single(Interval::closed(0, 3)));
        assert_eq!(nf, tr);

        let (tr, nf) = eval3_body_sets(Body::empty(), &Pair::exact(Interpretation::new()));
        assert!(tr.is_full() && nf.is_full());
    }

    #[test]
    fn since_vacuity_at_the_successor() {
        let mut i = Interpretation::new();
        i.set(GroundAtom::prop("Q"), Interval::point(5).into());
        let m = atom("P S[0,2] Q");
        let s = eval2_set(&m, &i);
        assert_eq!(s, IntervalSet::single(Interval::closed(5, 6)));
        let pts: Vec<Time> = (0..10).filter(|&t| eval2_at(&m, &i, t)).collect();
        assert_eq!(pts, vec![5, 6]);
    }
}
