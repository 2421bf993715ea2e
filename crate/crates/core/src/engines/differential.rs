//! Cross-check of the two stable-model characterizations on one instance:
//! stable fixpoints of the approximator against minimal here-and-there
//! models, both by exhaustive search over a window.

use std::fmt;

use super::config::{EngineConfig, EngineError};
use super::enumerate::plan_window;
use super::ht::stable_ht_in;
use super::models::is_stable2;
use crate::lang::{Dataset, GroundProgram, GroundRule};
use crate::operators::ReasoningInstance;
use crate::semantics::dump::write_interpretation;
use crate::semantics::Interpretation;
use crate::temporal::Time;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffReport {
    pub lo: Time,
    pub hi: Time,
    /// The window contains every stable model.
    pub complete: bool,
    pub candidates: u64,
    pub stable_ht: Vec<Interpretation>,
    pub stable2: Vec<Interpretation>,
    /// A candidate on which the two checks disagree.
    pub witness: Option<Interpretation>,
}

impl DiffReport {
    pub fn agrees(&self) -> bool { self.witness.is_none() }
}

impl fmt::Display for DiffReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "window: [{},{}]", self.lo, self.hi)?;
        writeln!(f, "complete: {}", self.complete)?;
        writeln!(f, "candidates: {}", self.candidates)?;
        writeln!(f, "stable-ht: {}", self.stable_ht.len())?;
        writeln!(f, "stable2: {}", self.stable2.len())?;
        match &self.witness {
            None => writeln!(f, "agree: true"),
            Some(w) => {
                writeln!(f, "agree: false")?;
                writeln!(f, "# witness")?;
                f.write_str(&write_interpretation(w))
            }
        }
    }
}

/// Runs both checks on every candidate of the window (widened when needed
/// and affordable).
pub fn differential_stable_check(inst: &ReasoningInstance, cfg: &EngineConfig) -> Result<DiffReport, EngineError> {
    let (space, complete) = plan_window(inst, cfg)?;
    let mut report = DiffReport {
        lo: space.lo,
        hi: space.hi,
        complete,
        candidates: space.size(),
        stable_ht: Vec::new(),
        stable2: Vec::new(),
        witness: None,
    };
    for mask in 0..space.size() {
        let i = space.decode(mask);
        let ht = stable_ht_in(inst, &space, &i)?;
        let aft = is_stable2(inst, &i, cfg)?;
        if ht {
            report.stable_ht.push(i.clone());
        }
        if aft {
            report.stable2.push(i.clone());
        }
        if ht != aft && report.witness.is_none() {
            report.witness = Some(i);
        }
    }
    report.stable_ht.sort_by_cached_key(write_interpretation);
    report.stable2.sort_by_cached_key(write_interpretation);
    Ok(report)
}

/// Greedily drops rules, facts and body literals while `fails` keeps
/// holding, and returns the smallest instance reached.
pub fn minimize_instance(inst: &ReasoningInstance, fails: impl Fn(&ReasoningInstance) -> bool) -> ReasoningInstance {
    let mut rules = inst.ground_program.rules.clone();
    let mut facts = inst.dataset.facts.clone();
    let build = |rules: &[GroundRule], facts: &[crate::lang::Fact]| {
        ReasoningInstance::from_ground(GroundProgram::new(rules.iter().cloned()), Dataset::new(facts.to_vec())).ok()
    };
    let still = |rules: &[GroundRule], facts: &[crate::lang::Fact]| build(rules, facts).is_some_and(|x| fails(&x));

    let mut progress = true;
    while progress {
        progress = false;
        for k in (0..rules.len()).rev() {
            let mut fewer = rules.clone();
            fewer.remove(k);
            if still(&fewer, &facts) {
                rules = fewer;
                progress = true;
            }
        }
        for k in (0..facts.len()).rev() {
            let mut fewer = facts.clone();
            fewer.remove(k);
            if still(&rules, &fewer) {
                facts = fewer;
                progress = true;
            }
        }
        for r in 0..rules.len() {
            for neg in [false, true] {
                let n = if neg { rules[r].negative.len() } else { rules[r].positive.len() };
                for k in (0..n).rev() {
                    let mut fewer = rules.clone();
                    let lits = if neg { &mut fewer[r].negative } else { &mut fewer[r].positive };
                    if k >= lits.len() {
                        continue;
                    }
                    lits.remove(k);
                    if still(&fewer, &facts) {
                        rules = fewer;
                        progress = true;
                    }
                }
            }
        }
    }
    build(&rules, &facts).unwrap_or_else(|| inst.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lang::{parse_dataset, parse_program};

    fn inst(p: &str, d: &str) -> ReasoningInstance {
        ReasoningInstance::new(&parse_program(p).unwrap(), parse_dataset(d).unwrap()).unwrap()
    }

    #[test]
    fn fixed_programs_agree() {
        let cfg = EngineConfig::window(0, 1);
        for (p, d, n) in [
            ("P :- G, not Q.", "G@[0,1]", 1),
            ("P :- P.", "", 1),
            ("P :- not P.", "", 0),
            ("P :- G, not Q. Q :- G, not P.", "G@[0,1]", 4),
            ("", "", 1),
        ] {
            let r = differential_stable_check(&inst(p, d), &cfg).unwrap();
            assert!(r.agrees(), "{p}\n{r}");
            assert_eq!(r.stable2.len(), n, "{p}");
            assert_eq!(r.stable_ht, r.stable2);
        }
        let r = differential_stable_check(&inst("", ""), &cfg).unwrap();
        assert_eq!(r.stable2, vec![Interpretation::new()]);
        assert!(r.complete);
    }

    #[test]
    fn minimization_keeps_the_failure() {
        let x = inst("P :- G, not Q. Q :- G, R. R :- G, diamondminus[0,1] P, not S.", "G@[0,1]\nS@3\nR@0");
        // pretend the failure is "some rule mentions S under negation"
        let fails = |y: &ReasoningInstance| y.ground_program.rules.iter().any(|r| r.negative.iter().any(|m| m.to_string() == "S"));
        let small = minimize_instance(&x, fails);
        assert!(fails(&small));
        assert_eq!(small.ground_program.to_string(), "R.\n".replace("R.", "R :- not S."));
        assert!(small.dataset.is_empty());
    }
}
