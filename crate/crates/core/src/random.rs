//! Seeded generators for instances, interpretations and formulas.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::aft::Pair;
use crate::lang::{
    Dataset, Fact, GroundAtom, GroundHeadAtom, HeadAtom, MetricAtom, Program, RelationalAtom, Rule,
};
use crate::semantics::{Interpretation, ThreeValuedInterpretation};
use crate::temporal::{Interval, IntervalSet, Time, TimeBound};

/// The generator used everywhere a seed is accepted.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng { ChaCha8Rng::seed_from_u64(seed) }

/// Shape of random propositional instances.
///
/// Every rule body contains the guard atom `G`, which only the dataset
/// defines, and the dataset puts `G` inside the window. Rule bodies therefore
/// only hold inside the window and fixpoint iterations stay finite.
#[derive(Clone, Debug)]
pub struct InstanceShape {
    /// Predicates besides the guard.
    pub max_idb: usize,
    pub max_rules: usize,
    pub max_body_literals: usize,
    pub max_depth: usize,
    pub max_delta: Time,
    pub window: (Time, Time),
    /// Chance that a rule head is wrapped in a box.
    pub boxed_head: f64,
}

impl Default for InstanceShape {
    fn default() -> Self {
        InstanceShape { max_idb: 2, max_rules: 3, max_body_literals: 2, max_depth: 2, max_delta: 2, window: (0, 3), boxed_head: 0.2 }
    }
}

pub const GUARD: &str = "G";
const IDB: [&str; 4] = ["P", "Q", "R", "S"];

fn rel(p: &str) -> RelationalAtom { RelationalAtom { predicate: p.to_owned(), args: Vec::new() } }

/// A non-negative interval with endpoints in `[0, max]`.
pub fn random_delta<R: Rng + ?Sized>(rng: &mut R, max: Time) -> Interval {
    let a = rng.gen_range(0..=max);
    let b = rng.gen_range(a..=max);
    Interval::closed(a, b)
}

/// Like [`random_delta`], unbounded above one time in five.
pub fn random_delta_maybe_unbounded<R: Rng + ?Sized>(rng: &mut R, max: Time) -> Interval {
    let d = random_delta(rng, max);
    if rng.gen_bool(0.2) {
        Interval::from(d.lo().finite().unwrap())
    } else {
        d
    }
}

/// A random metric atom over `atoms` with at most `depth` nested operators
/// and interval endpoints up to `max_delta`; with `unbounded`, some
/// intervals have no upper end.
pub fn random_metric_atom<A: Clone, R: Rng + ?Sized>(
    rng: &mut R,
    atoms: &[A],
    depth: usize,
    max_delta: Time,
    unbounded: bool,
) -> MetricAtom<A> {
    if depth == 0 || rng.gen_bool(0.3) {
        return match rng.gen_range(0..12) {
            0 => MetricAtom::Top,
            1 => MetricAtom::Bottom,
            _ => MetricAtom::Rel(atoms.choose(rng).expect("at least one atom").clone()),
        };
    }
    let d = if unbounded { random_delta_maybe_unbounded(rng, max_delta) } else { random_delta(rng, max_delta) };
    let sub = |rng: &mut R| Box::new(random_metric_atom(rng, atoms, depth - 1, max_delta, unbounded));
    match rng.gen_range(0..6) {
        0 => MetricAtom::DiamondMinus(d, sub(rng)),
        1 => MetricAtom::DiamondPlus(d, sub(rng)),
        2 => MetricAtom::BoxMinus(d, sub(rng)),
        3 => MetricAtom::BoxPlus(d, sub(rng)),
        4 => {
            let l = sub(rng);
            MetricAtom::Since(l, d, sub(rng))
        }
        _ => {
            let l = sub(rng);
            MetricAtom::Until(l, d, sub(rng))
        }
    }
}

/// A random head atom: a chain of up to `depth` boxes over one atom.
pub fn random_head_atom<R: Rng + ?Sized>(rng: &mut R, atoms: &[GroundAtom], depth: usize, max_delta: Time) -> GroundHeadAtom {
    let mut h = HeadAtom::Rel(atoms.choose(rng).expect("at least one atom").clone());
    for _ in 0..rng.gen_range(0..=depth) {
        let d = random_delta(rng, max_delta);
        h = if rng.gen_bool(0.5) { HeadAtom::BoxMinus(d, Box::new(h)) } else { HeadAtom::BoxPlus(d, Box::new(h)) };
    }
    h
}

/// A random propositional program and dataset of the given shape.
pub fn random_instance<R: Rng + ?Sized>(rng: &mut R, shape: &InstanceShape) -> (Program, Dataset) {
    let n_idb = rng.gen_range(1..=shape.max_idb.clamp(1, IDB.len()));
    let idb: Vec<RelationalAtom> = IDB[..n_idb].iter().map(|p| rel(p)).collect();
    let mut body_atoms = idb.clone();
    body_atoms.push(rel(GUARD));
    let (wlo, whi) = shape.window;

    let mut rules = Vec::new();
    for _ in 0..rng.gen_range(1..=shape.max_rules.max(1)) {
        let mut head = HeadAtom::Rel(idb.choose(rng).unwrap().clone());
        if rng.gen_bool(shape.boxed_head) {
            let d = random_delta(rng, shape.max_delta);
            head = if rng.gen_bool(0.5) { HeadAtom::BoxMinus(d, Box::new(head)) } else { HeadAtom::BoxPlus(d, Box::new(head)) };
        }
        let mut rule = Rule { head, positive: vec![MetricAtom::Rel(rel(GUARD))], negative: Vec::new() };
        for _ in 0..rng.gen_range(0..=shape.max_body_literals) {
            let m = random_metric_atom(rng, &body_atoms, shape.max_depth, shape.max_delta, false);
            if rng.gen_bool(0.5) {
                rule.negative.push(m);
            } else {
                rule.positive.push(m);
            }
        }
        if !rules.contains(&rule) {
            rules.push(rule);
        }
    }

    let mut facts = Vec::new();
    for _ in 0..rng.gen_range(1..=2) {
        let a = rng.gen_range(wlo..=whi);
        let b = rng.gen_range(a..=whi);
        facts.push(Fact { atom: GroundAtom::prop(GUARD), interval: Interval::closed(a, b) });
    }
    if rng.gen_bool(0.3) {
        let t = rng.gen_range(wlo..=whi);
        let p = idb.choose(rng).unwrap();
        facts.push(Fact { atom: GroundAtom::prop(&p.predicate), interval: Interval::point(t) });
    }
    (Program { rules }, Dataset::new(facts))
}

/// A random set of up to three intervals with endpoints in `[lo, hi]`;
/// with `unbounded`, the outer members may extend to infinity.
pub fn random_interval_set<R: Rng + ?Sized>(rng: &mut R, lo: Time, hi: Time, unbounded: bool) -> IntervalSet {
    let n = rng.gen_range(0..=3);
    let mut pieces = Vec::new();
    for _ in 0..n {
        let a = rng.gen_range(lo..=hi);
        let b = rng.gen_range(a..=hi);
        let lo_b = if unbounded && rng.gen_bool(0.15) { TimeBound::NegInf } else { TimeBound::Finite(a) };
        let hi_b = if unbounded && rng.gen_bool(0.15) { TimeBound::PosInf } else { TimeBound::Finite(b) };
        pieces.push(Interval::new(lo_b, lo_b.is_finite(), hi_b, hi_b.is_finite()).expect("non-empty"));
    }
    IntervalSet::from_intervals(pieces)
}

/// A random interpretation of `atoms` with extensions inside `[lo, hi]`
/// (or unbounded beyond it, when allowed).
pub fn random_interpretation<R: Rng + ?Sized>(rng: &mut R, atoms: &[GroundAtom], lo: Time, hi: Time, unbounded: bool) -> Interpretation {
    atoms.iter().map(|a| (a.clone(), random_interval_set(rng, lo, hi, unbounded))).collect()
}

/// A random consistent pair: `lo` is a random subset of `hi`.
pub fn random_pair<R: Rng + ?Sized>(rng: &mut R, atoms: &[GroundAtom], lo: Time, hi: Time, unbounded: bool) -> ThreeValuedInterpretation {
    let upper = random_interpretation(rng, atoms, lo, hi, unbounded);
    let lower = upper.intersect(&random_interpretation(rng, atoms, lo, hi, unbounded));
    Pair::new(lower, upper)
}

/// A pair at least as precise as `j`: the lower bound grows and the upper
/// bound shrinks, staying consistent.
pub fn random_refinement<R: Rng + ?Sized>(
    rng: &mut R,
    j: &ThreeValuedInterpretation,
    atoms: &[GroundAtom],
    lo: Time,
    hi: Time,
    unbounded: bool,
) -> ThreeValuedInterpretation {
    let upper = j.hi.intersect(&j.lo.union(&random_interpretation(rng, atoms, lo, hi, unbounded)));
    let lower = j.lo.union(&upper.intersect(&random_interpretation(rng, atoms, lo, hi, unbounded)));
    Pair::new(lower, upper)
}
