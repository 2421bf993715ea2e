//! Reference semantics: truth of a metric atom at one timepoint, by direct
//! quantification over timepoints.
//!
//! Quantifiers range over all integers. To make that finite, note that the
//! truth of a formula is constant on `(-inf, -R]` and on `[R, +inf)` for a
//! radius `R` depending only on the interpretation's finite endpoints and the
//! formula's intervals. Each subformula is tabulated on `[-K, K]` with
//! `K > R`; lookups outside the table read the nearest boundary entry. For
//! since and until, among witnesses beyond the table only the one nearest to
//! `t` needs checking, since it leaves the fewest intermediate points.

use super::interp::{Body, Interpretation, ThreeValuedInterpretation, TruthValue3};
use crate::lang::GroundMetricAtom;
use crate::temporal::{Interval, Time, TimeBound};

/// Largest finite endpoint of a metric interval (its lower end if unbounded).
fn reach(d: &Interval) -> Time {
    match (d.lo(), d.hi()) {
        (_, TimeBound::Finite(h)) => h,
        (TimeBound::Finite(l), _) => l,
        _ => 0,
    }
}

fn radius(m: &GroundMetricAtom, base: Time) -> Time {
    use GroundMetricAtom as M;
    match m {
        M::Top | M::Bottom => 0,
        M::Rel(_) => base,
        M::DiamondMinus(d, c) | M::DiamondPlus(d, c) | M::BoxMinus(d, c) | M::BoxPlus(d, c) => {
            radius(c, base) + reach(d) + 1
        }
        M::Since(l, d, r) | M::Until(l, d, r) => radius(l, base).max(radius(r, base)) + reach(d) + 1,
    }
}

struct Table {
    k: Time,
    vals: Vec<bool>,
}

impl Table {
    fn at(&self, t: Time) -> bool { self.vals[(t.clamp(-self.k, self.k) + self.k) as usize] }
}

fn tabulate(m: &GroundMetricAtom, i: &Interpretation, k: Time) -> Table {
    use GroundMetricAtom as M;
    let points = || -k..=k;
    let vals: Vec<bool> = match m {
        M::Top => points().map(|_| true).collect(),
        M::Bottom => points().map(|_| false).collect(),
        M::Rel(a) => {
            let s = i.get(a);
            points().map(|t| s.contains(t)).collect()
        }
        M::DiamondMinus(d, c) | M::DiamondPlus(d, c) | M::BoxMinus(d, c) | M::BoxPlus(d, c) => {
            let c = tabulate(c, i, k);
            let past = matches!(m, M::DiamondMinus(..) | M::BoxMinus(..));
            let exists = matches!(m, M::DiamondMinus(..) | M::DiamondPlus(..));
            points()
                .map(|t| {
                    // t' with t - t' ∈ δ (past) or t' - t ∈ δ (future), clamped to the table
                    let near = if past { t - d_lo(d) } else { t + d_lo(d) };
                    let far = match d.hi().finite() {
                        Some(h) => if past { t - h } else { t + h },
                        None => if past { -k } else { k },
                    };
                    let (a, b) = if past { (far, near) } else { (near, far) };
                    let (a, b) = (a.clamp(-k, k), b.clamp(-k, k));
                    if exists {
                        (a..=b).any(|u| c.at(u))
                    } else {
                        (a..=b).all(|u| c.at(u))
                    }
                })
                .collect()
        }
        M::Since(l, d, r) | M::Until(l, d, r) => {
            let (l, r) = (tabulate(l, i, k), tabulate(r, i, k));
            let step: Time = if matches!(m, M::Since(..)) { -1 } else { 1 };
            let dist_lo = d_lo(d);
            points()
                .map(|t| {
                    // witnesses t' = t + step * dist, walked away from t; past the
                    // table edge only the first one matters
                    let beyond = k + 1 - step * t;
                    let last = match d.hi().finite() {
                        Some(h) => h.min(beyond.max(dist_lo)),
                        None => beyond.max(dist_lo),
                    };
                    // every point strictly between t and the current witness satisfies l
                    let mut clear = true;
                    for dist in 0..=last {
                        let u = t + step * dist;
                        if dist >= dist_lo && r.at(u) {
                            return true;
                        }
                        if dist >= 1 {
                            clear &= l.at(u);
                            if !clear {
                                return false;
                            }
                        }
                    }
                    false
                })
                .collect()
        }
    };
    Table { k, vals }
}

fn d_lo(d: &Interval) -> Time { d.lo().finite().expect("metric intervals have a finite lower end") }

/// Truth of a ground metric atom under `i` at `t`.
pub fn eval2_at(m: &GroundMetricAtom, i: &Interpretation, t: Time) -> bool {
    let base = i.max_finite_magnitude() + 1;
    let k = radius(m, base).max(t.abs()) + 1;
    tabulate(m, i, k).at(t)
}

/// Truth of a conjunction of literals.
pub fn eval2_body_at(body: Body<'_>, i: &Interpretation, t: Time) -> bool {
    body.positive.iter().all(|m| eval2_at(m, i, t)) && body.negative.iter().all(|m| !eval2_at(m, i, t))
}

/// Three-valued truth of a metric atom: the verdicts under both bounds.
pub fn eval3_at(m: &GroundMetricAtom, j: &ThreeValuedInterpretation, t: Time) -> TruthValue3 {
    TruthValue3::from_pair(eval2_at(m, &j.lo, t), eval2_at(m, &j.hi, t))
}

/// Three-valued truth of a body: the meet of its literals, negation flipping.
pub fn eval3_body_at(body: Body<'_>, j: &ThreeValuedInterpretation, t: Time) -> TruthValue3 {
    let pos = body.positive.iter().map(|m| eval3_at(m, j, t));
    let neg = body.negative.iter().map(|m| eval3_at(m, j, t).negate());
    pos.chain(neg).fold(TruthValue3::True, TruthValue3::meet)
}
