//! The immediate consequence operator and its three-valued approximator.

use std::collections::{BTreeMap, BTreeSet};

use crate::aft::{Approximator, Lattice, Pair};
use crate::lang::{active_constants, ground, Dataset, GroundAtom, GroundHeadAtom, GroundProgram, GroundRule, LangError, Program};
use crate::semantics::symbolic::{eval2_body_set, eval3_body_sets};
use crate::semantics::{head_apply, Body, Interpretation, ThreeValuedInterpretation};
use crate::temporal::IntervalSet;

/// A dataset with a ground program over a fixed, finite set of atoms.
#[derive(Clone, Debug)]
pub struct ReasoningInstance {
    pub dataset: Dataset,
    pub ground_program: GroundProgram,
    /// Every atom mentioned by a ground rule or a fact; no other atom can
    /// ever be derived.
    pub herbrand: BTreeSet<GroundAtom>,
    closure: Interpretation,
    lattice: InterpLattice,
}

impl ReasoningInstance {
    /// Grounds `program` over the constants of both inputs.
    pub fn new(program: &Program, dataset: Dataset) -> Result<Self, LangError> {
        let consts = active_constants(program, &dataset);
        ReasoningInstance::from_ground(ground(program, &consts), dataset)
    }

    pub fn from_ground(ground_program: GroundProgram, dataset: Dataset) -> Result<Self, LangError> {
        let mut arities: BTreeMap<&str, usize> = BTreeMap::new();
        for a in ground_program.rules.iter().flat_map(GroundRule::atoms) {
            arities.entry(&a.predicate).or_insert(a.args.len());
        }
        for f in &dataset.facts {
            match arities.get(f.atom.predicate.as_str()) {
                Some(&n) if n != f.atom.args.len() => {
                    return Err(LangError::ArityMismatch {
                        predicate: f.atom.predicate.clone(),
                        program: n,
                        dataset: f.atom.args.len(),
                    })
                }
                _ => {}
            }
        }
        let mut herbrand = ground_program.atoms();
        herbrand.extend(dataset.facts.iter().map(|f| f.atom.clone()));
        let closure = Interpretation::from_dataset(&dataset);
        let lattice = InterpLattice { herbrand: herbrand.iter().cloned().collect() };
        Ok(ReasoningInstance { dataset, ground_program, herbrand, closure, lattice })
    }

    /// The least interpretation satisfying the dataset.
    pub fn dataset_closure(&self) -> &Interpretation { &self.closure }

    pub fn interp_lattice(&self) -> &InterpLattice { &self.lattice }

    /// Ground rules whose head mentions `atom`.
    pub fn rules_deriving<'a>(&'a self, atom: &'a GroundAtom) -> impl Iterator<Item = &'a GroundRule> + 'a {
        self.ground_program.rules.iter().filter(move |r| r.head.atom() == Some(atom))
    }

    /// Dataset closure plus everything the rules force from the given firing
    /// sets, one per rule.
    fn derive(&self, firing: impl Iterator<Item = (usize, IntervalSet)>) -> Interpretation {
        let mut out = self.closure.clone();
        for (k, s) in firing {
            let rule = &self.ground_program.rules[k];
            if s.is_empty() {
                continue;
            }
            if let Some((atom, forced)) = head_apply(&rule.head, &s) {
                out.add(&atom, &forced);
            }
        }
        out
    }

    fn active_rules(&self) -> impl Iterator<Item = (usize, &GroundRule)> {
        self.ground_program.rules.iter().enumerate().filter(|(_, r)| r.head != GroundHeadAtom::Top)
    }
}

/// One application of the immediate consequence operator.
pub fn t_op(inst: &ReasoningInstance, i: &Interpretation) -> Interpretation {
    inst.derive(inst.active_rules().map(|(k, r)| (k, eval2_body_set(Body::of(r), i))))
}

/// First component: fire rules where the body is true under `(lo, hi)`.
pub fn a_lower(inst: &ReasoningInstance, lo: &Interpretation, hi: &Interpretation) -> Interpretation {
    let j = Pair::new(lo.clone(), hi.clone());
    inst.derive(inst.active_rules().map(|(k, r)| (k, eval3_body_sets(Body::of(r), &j).0)))
}

/// Second component: fire rules where the body is not false under `(lo, hi)`.
pub fn a_upper(inst: &ReasoningInstance, lo: &Interpretation, hi: &Interpretation) -> Interpretation {
    let j = Pair::new(lo.clone(), hi.clone());
    inst.derive(inst.active_rules().map(|(k, r)| (k, eval3_body_sets(Body::of(r), &j).1)))
}

/// The three-valued immediate consequence operator.
pub fn a_op(inst: &ReasoningInstance, j: &ThreeValuedInterpretation) -> ThreeValuedInterpretation {
    Pair::new(a_lower(inst, &j.lo, &j.hi), a_upper(inst, &j.lo, &j.hi))
}

/// Interpretations over a fixed set of atoms, ordered by inclusion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterpLattice {
    pub herbrand: Vec<GroundAtom>,
}

impl Lattice for InterpLattice {
    type Elem = Interpretation;

    fn bottom(&self) -> Interpretation { Interpretation::new() }

    fn top(&self) -> Interpretation { self.herbrand.iter().map(|a| (a.clone(), IntervalSet::full())).collect() }

    fn leq(&self, a: &Interpretation, b: &Interpretation) -> bool { a.is_subset(b) }

    fn meet(&self, a: &Interpretation, b: &Interpretation) -> Interpretation { a.intersect(b) }

    fn join(&self, a: &Interpretation, b: &Interpretation) -> Interpretation { a.union(b) }
}

impl Approximator for ReasoningInstance {
    type Lattice = InterpLattice;

    fn lattice(&self) -> &InterpLattice { &self.lattice }

    fn lower(&self, lo: &Interpretation, hi: &Interpretation) -> Interpretation { a_lower(self, lo, hi) }

    fn upper(&self, lo: &Interpretation, hi: &Interpretation) -> Interpretation { a_upper(self, lo, hi) }
}
