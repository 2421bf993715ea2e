//! Brute-force search over interpretations confined to a window.
//!
//! Candidates are false outside the window, but every check on them is exact
//! over the whole timeline. A search is complete when the upper bound of the
//! well-founded model fits in the window: every stable model lies below it.

use super::config::{EngineConfig, EngineError, Mode};
use super::models::{is_stable2, well_founded_model};
use crate::aft::{self, Pair};
use crate::lang::GroundAtom;
use crate::operators::{a_lower, ReasoningInstance};
use crate::semantics::dump::write_interpretation;
use crate::semantics::{Interpretation, ThreeValuedInterpretation};
use crate::temporal::{Interval, IntervalSet, Time, TimeBound};

/// Bijection between bit masks and interpretations supported on
/// `[lo, hi]`: bit `k * width + (t - lo)` is atom `k` at `t`.
#[derive(Clone, Debug)]
pub struct WindowSpace {
    pub lo: Time,
    pub hi: Time,
    pub atoms: Vec<GroundAtom>,
}

impl WindowSpace {
    /// Fails unless all `2^bits` candidates fit in the budget.
    pub fn new(inst: &ReasoningInstance, lo: Time, hi: Time, budget: u64) -> Result<Self, EngineError> {
        if lo > hi {
            return Err(EngineError::EmptyWindow { lo, hi });
        }
        let space = WindowSpace { lo, hi, atoms: inst.herbrand.iter().cloned().collect() };
        let bits = space.bits();
        if bits >= 63 || 1u64 << bits > budget {
            return Err(EngineError::BudgetExceeded { bits, budget });
        }
        Ok(space)
    }

    pub fn width(&self) -> u32 { (self.hi - self.lo + 1) as u32 }

    pub fn bits(&self) -> u32 { (self.atoms.len() as u64 * (self.hi - self.lo + 1) as u64).min(u32::MAX as u64) as u32 }

    /// Number of candidates.
    pub fn size(&self) -> u64 { 1 << self.bits() }

    pub fn interval(&self) -> Interval { Interval::closed(self.lo, self.hi) }

    pub fn decode(&self, mask: u64) -> Interpretation {
        let w = self.width();
        let mut out = Interpretation::new();
        for (k, atom) in self.atoms.iter().enumerate() {
            let row = mask >> (k as u32 * w) & ((1u64 << w) - 1);
            if row != 0 {
                let pts = (0..w).filter(|b| row >> b & 1 == 1).map(|b| self.lo + b as Time);
                out.set(atom.clone(), IntervalSet::from_points(pts));
            }
        }
        out
    }

    /// `None` if `i` holds somewhere outside the window or on an atom
    /// outside the space.
    pub fn encode(&self, i: &Interpretation) -> Option<u64> {
        let w = self.width();
        let mut mask = 0u64;
        for (atom, s) in i.iter() {
            let k = self.atoms.iter().position(|a| a == atom)?;
            if !s.is_subset(&self.interval().into()) {
                return None;
            }
            for t in self.lo..=self.hi {
                if s.contains(t) {
                    mask |= 1 << (k as u32 * w + (t - self.lo) as u32);
                }
            }
        }
        Some(mask)
    }

    /// Whether `i` is false everywhere outside the window.
    pub fn supports(&self, i: &Interpretation) -> bool { self.encode(i).is_some() }
}

fn sort_by_dump(models: &mut [Interpretation]) { models.sort_by_cached_key(write_interpretation); }

/// Two-valued stable models supported on the configured window, in dump order.
pub fn enumerate_stable2_bounded(inst: &ReasoningInstance, cfg: &EngineConfig) -> Result<Vec<Interpretation>, EngineError> {
    let (lo, hi) = cfg.window_bounds()?;
    let space = WindowSpace::new(inst, lo, hi, cfg.enumeration_budget)?;
    stable2_in(inst, &space, cfg)
}

pub(crate) fn stable2_in(inst: &ReasoningInstance, space: &WindowSpace, cfg: &EngineConfig) -> Result<Vec<Interpretation>, EngineError> {
    let mut out = Vec::new();
    for mask in 0..space.size() {
        let i = space.decode(mask);
        if is_stable2(inst, &i, cfg)? {
            out.push(i);
        }
    }
    sort_by_dump(&mut out);
    Ok(out)
}

/// Three-valued stable models whose upper bound is supported on the window.
///
/// The lower bound of a stable model is determined by its upper bound, so
/// only upper bounds are enumerated.
pub fn enumerate_stable3_bounded(
    inst: &ReasoningInstance,
    cfg: &EngineConfig,
) -> Result<Vec<ThreeValuedInterpretation>, EngineError> {
    let (lo, hi) = cfg.window_bounds()?;
    let space = WindowSpace::new(inst, lo, hi, cfg.enumeration_budget)?;
    let lattice = inst.interp_lattice();
    let mut out = Vec::new();
    for mask in 0..space.size() {
        let upper = space.decode(mask);
        let nt = |e| EngineError::non_termination(inst, e);
        let Some(lower) = aft::bounded_lfp(|x| a_lower(inst, x, &upper), lattice, &upper, cfg.max_iters).map_err(nt)? else {
            continue;
        };
        let j = Pair::new(lower.value, upper);
        if super::models::is_stable3(inst, &j, cfg)? {
            out.push(j);
        }
    }
    out.sort_by_cached_key(|j| (write_interpretation(&j.lo), write_interpretation(&j.hi)));
    Ok(out)
}


/// Result of a window search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub lo: Time,
    pub hi: Time,
    /// Every stable model of the instance is in `models`.
    pub complete: bool,
    pub models: Vec<Interpretation>,
}

/// Picks the window to search: the configured one, widened to cover the
/// well-founded upper bound when that is finite and the budget allows.
/// The flag says whether the returned window is guaranteed to contain every
/// stable model.
pub(crate) fn plan_window(inst: &ReasoningInstance, cfg: &EngineConfig) -> Result<(WindowSpace, bool), EngineError> {
    let (lo, hi) = cfg.window_bounds()?;
    let base = WindowSpace::new(inst, lo, hi, cfg.enumeration_budget)?;
    let wf_hi = match well_founded_model(inst, &EngineConfig { mode: Mode::Unbounded, ..*cfg }) {
        Ok(r) => r.value.as_pair().hi,
        Err(EngineError::NonTermination { .. }) => return Ok((base, false)),
        Err(e) => return Err(e),
    };
    if base.supports(&wf_hi) {
        return Ok((base, true));
    }
    let (a, b) = wf_hi
        .iter()
        .filter_map(|(_, s)| s.hull())
        .fold((TimeBound::Finite(lo), TimeBound::Finite(hi)), |(a, b), iv| (a.min(iv.lo()), b.max(iv.hi())));
    match (a, b) {
        (TimeBound::Finite(a), TimeBound::Finite(b)) => match WindowSpace::new(inst, a, b, cfg.enumeration_budget) {
            Ok(wide) => Ok((wide, true)),
            Err(EngineError::BudgetExceeded { .. }) => Ok((base, false)),
            Err(e) => Err(e),
        },
        _ => Ok((base, false)),
    }
}

/// Stable models found in the configured window, widened if needed and
/// affordable, with a completeness verdict.
pub fn enumerate_stable2(inst: &ReasoningInstance, cfg: &EngineConfig) -> Result<Enumeration, EngineError> {
    let (space, complete) = plan_window(inst, cfg)?;
    let models = stable2_in(inst, &space, cfg)?;
    Ok(Enumeration { lo: space.lo, hi: space.hi, complete, models })
}
