//! The here-and-there characterization of stable models, by brute force.

use super::config::{EngineConfig, EngineError};
use super::enumerate::WindowSpace;
use crate::lang::GroundHeadAtom;
use crate::operators::{a_lower, ReasoningInstance};
use crate::semantics::symbolic::{body_set_with, eval2_set};
use crate::semantics::{Body, Interpretation, ThreeValuedInterpretation};

/// Both rule conditions and the dataset condition, without requiring
/// `here ⊆ there`. For every rule: where the positive body holds under
/// `here` and no negated atom holds under `there`, the head holds under
/// `here`; and the rule is satisfied by `there` alone.
pub(crate) fn ht_conditions_hold(inst: &ReasoningInstance, here: &Interpretation, there: &Interpretation) -> bool {
    here.satisfies_dataset(&inst.dataset) && there_conditions_hold(inst, there) && here_conditions_hold(inst, here, there)
}

fn here_conditions_hold(inst: &ReasoningInstance, here: &Interpretation, there: &Interpretation) -> bool {
    inst.ground_program.rules.iter().all(|r| {
        r.head == GroundHeadAtom::Top || body_set_with(Body::of(r), here, there).is_subset(&eval2_set(&r.head.to_metric(), here))
    })
}

fn there_conditions_hold(inst: &ReasoningInstance, there: &Interpretation) -> bool {
    inst.ground_program.rules.iter().all(|r| {
        r.head == GroundHeadAtom::Top || body_set_with(Body::of(r), there, there).is_subset(&eval2_set(&r.head.to_metric(), there))
    })
}

/// `J` is an HT-model: consistent, its lower bound satisfies the dataset and
/// both rule conditions hold.
pub fn is_ht_model(inst: &ReasoningInstance, j: &ThreeValuedInterpretation) -> bool {
    j.lo.is_subset(&j.hi) && ht_conditions_hold(inst, &j.lo, &j.hi)
}

/// `(I, I)` is an HT-model and no `J ⊊ I` makes `(J, I)` one, so the meet of
/// all such `J` is `I` itself. `I` must be supported on the window.
pub fn is_stable_ht(inst: &ReasoningInstance, i: &Interpretation, cfg: &EngineConfig) -> Result<bool, EngineError> {
    let (lo, hi) = cfg.window_bounds()?;
    let space = WindowSpace::new(inst, lo, hi, cfg.enumeration_budget)?;
    stable_ht_in(inst, &space, i)
}

pub(crate) fn stable_ht_in(inst: &ReasoningInstance, space: &WindowSpace, i: &Interpretation) -> Result<bool, EngineError> {
    let full = space.encode(i).ok_or(EngineError::NotWindowSupported { lo: space.lo, hi: space.hi })?;
    if !ht_conditions_hold(inst, i, i) {
        return Ok(false);
    }
    // every companion contains the dataset, so only the rest of I varies
    let fixed = space.encode(&Interpretation::from_dataset(&inst.dataset).intersect(i)).unwrap_or(0);
    let free = full & !fixed;
    let mut sub = free;
    while sub != 0 {
        sub = (sub - 1) & free;
        let j = space.decode(sub | fixed);
        if j.satisfies_dataset(&inst.dataset) && here_conditions_hold(inst, &j, i) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// If `J` is an HT-model then its lower bound is a prefixpoint of
/// `A¹(·, J.hi)`. Returns whether that implication holds.
pub fn check_lemma_prefixpoint(inst: &ReasoningInstance, j: &ThreeValuedInterpretation) -> bool {
    !is_ht_model(inst, j) || a_lower(inst, &j.lo, &j.hi).is_subset(&j.lo)
}

#[cfg(test)]
/// Meet of every window-supported `J`, subset of `I` or not, satisfying the
/// HT conditions with `I`; `None` if there is none.
pub(crate) fn ht_meet_unrestricted(inst: &ReasoningInstance, space: &WindowSpace, i: &Interpretation) -> Option<Interpretation> {
    (0..space.size())
        .map(|m| space.decode(m))
        .filter(|j| ht_conditions_hold(inst, j, i))
        .reduce(|a, b| a.intersect(&b))
}
