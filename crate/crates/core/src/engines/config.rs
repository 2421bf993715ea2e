use std::fmt::Write;

use crate::aft::{NonTermination, DEFAULT_MAX_ITERS};
use crate::operators::ReasoningInstance;
use crate::semantics::Interpretation;
use crate::temporal::Time;

/// Whether searches are confined to a finite window of timepoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Unbounded,
    Window { lo: Time, hi: Time },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EngineConfig {
    pub mode: Mode,
    /// Cap on the length of every fixpoint iteration.
    pub max_iters: usize,
    /// Cap on the number of candidate interpretations a brute-force search
    /// may visit.
    pub enumeration_budget: u64,
}

pub const DEFAULT_BUDGET: u64 = 1 << 16;

impl Default for EngineConfig {
    fn default() -> Self { EngineConfig { mode: Mode::Unbounded, max_iters: DEFAULT_MAX_ITERS, enumeration_budget: DEFAULT_BUDGET } }
}

impl EngineConfig {
    pub fn window(lo: Time, hi: Time) -> Self { EngineConfig { mode: Mode::Window { lo, hi }, ..EngineConfig::default() } }

    pub fn with_mode(self, mode: Mode) -> Self { EngineConfig { mode, ..self } }

    pub fn window_bounds(&self) -> Result<(Time, Time), EngineError> {
        match self.mode {
            Mode::Window { lo, hi } if lo <= hi => Ok((lo, hi)),
            Mode::Window { lo, hi } => Err(EngineError::EmptyWindow { lo, hi }),
            Mode::Unbounded => Err(EngineError::WindowRequired),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    #[error("no fixpoint after {iterations} iterations; still changing:\n{diagnostic}")]
    NonTermination { iterations: usize, diagnostic: String },
    #[error("search space of 2^{bits} candidates exceeds the budget of {budget}")]
    BudgetExceeded { bits: u32, budget: u64 },
    #[error("this check needs a bounded window")]
    WindowRequired,
    #[error("window [{lo},{hi}] is empty")]
    EmptyWindow { lo: Time, hi: Time },
    #[error("interpretation is not confined to the window [{lo},{hi}]")]
    NotWindowSupported { lo: Time, hi: Time },
}

impl EngineError {
    /// Names the atoms that differ between the last two iterates and the rules
    /// able to derive them.
    pub(crate) fn from_iterates(inst: &ReasoningInstance, pairs: &[(&Interpretation, &Interpretation)], iterations: usize) -> Self {
        let mut diagnostic = String::new();
        for (last, next) in pairs {
            for atom in &inst.herbrand {
                let (a, b) = (last.get(atom), next.get(atom));
                if a != b {
                    let _ = writeln!(diagnostic, "  {atom}: {a} -> {b}");
                    for r in inst.rules_deriving(atom) {
                        let _ = writeln!(diagnostic, "    via {r}");
                    }
                }
            }
        }
        EngineError::NonTermination { iterations, diagnostic }
    }

    pub(crate) fn non_termination(inst: &ReasoningInstance, e: NonTermination<Interpretation>) -> Self {
        EngineError::from_iterates(inst, &[(&e.last, &e.next)], e.iterations)
    }
}
