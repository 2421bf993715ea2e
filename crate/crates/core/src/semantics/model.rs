//! Model conditions, checked exactly over the whole timeline.

use super::interp::{Body, Interpretation, ThreeValuedInterpretation};
use super::symbolic::{eval2_body_set, eval2_set, eval3_body_sets};
use crate::lang::{Dataset, GroundHeadAtom, GroundProgram};

/// `I` satisfies every fact, and every rule body is, at every timepoint,
/// no truer than the head.
pub fn is_model2(i: &Interpretation, d: &Dataset, gp: &GroundProgram) -> bool {
    i.satisfies_dataset(d)
        && gp.rules.iter().all(|r| {
            r.head == GroundHeadAtom::Top || eval2_body_set(Body::of(r), i).is_subset(&eval2_set(&r.head.to_metric(), i))
        })
}

/// Three-valued version: `lo` satisfies the facts, the head is true wherever
/// the body is true and not false wherever the body is not false.
pub fn is_model3(j: &ThreeValuedInterpretation, d: &Dataset, gp: &GroundProgram) -> bool {
    j.lo.satisfies_dataset(d)
        && gp.rules.iter().all(|r| {
            if r.head == GroundHeadAtom::Top {
                return true;
            }
            let (tr, nf) = eval3_body_sets(Body::of(r), j);
            let head = r.head.to_metric();
            tr.is_subset(&eval2_set(&head, &j.lo)) && nf.is_subset(&eval2_set(&head, &j.hi))
        })
}
