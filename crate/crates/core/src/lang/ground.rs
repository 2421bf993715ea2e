//! Active-domain grounding.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use super::ast::{Dataset, GroundAtom, GroundRule, Program, RelationalAtom, Rule, Term};

/// Injected when a program has variables but nothing mentions a constant.
pub const FRESH_CONSTANT: &str = "C0";

/// Constants mentioned anywhere in the program or the dataset.
pub fn active_constants(program: &Program, dataset: &Dataset) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    let mut has_vars = false;
    for rule in &program.rules {
        for a in rule.atoms() {
            for t in &a.args {
                match t {
                    Term::Const(c) => {
                        out.insert(c.clone());
                    }
                    Term::Var(_) => has_vars = true,
                }
            }
        }
    }
    for fact in &dataset.facts {
        out.extend(fact.atom.args.iter().cloned());
    }
    if out.is_empty() && has_vars {
        out.insert(FRESH_CONSTANT.to_owned());
    }
    out
}

/// Ground rules in first-occurrence order, without duplicates.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroundProgram {
    pub rules: Vec<GroundRule>,
}

impl GroundProgram {
    pub fn new(rules: impl IntoIterator<Item = GroundRule>) -> Self {
        let mut seen = HashSet::new();
        let rules = rules.into_iter().filter(|r| seen.insert(r.clone())).collect();
        GroundProgram { rules }
    }

    pub fn len(&self) -> usize { self.rules.len() }

    pub fn is_empty(&self) -> bool { self.rules.is_empty() }

    /// Every ground atom occurring in some rule.
    pub fn atoms(&self) -> BTreeSet<GroundAtom> {
        self.rules.iter().flat_map(|r| r.atoms().into_iter().cloned()).collect()
    }
}

impl fmt::Display for GroundProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rules {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

/// All instances of one rule, in lexicographic order of the substitution
/// (variables sorted by name). Not deduplicated.
pub fn ground_rule(rule: &Rule<RelationalAtom>, consts: &BTreeSet<String>) -> Vec<GroundRule> {
    let vars: Vec<String> = rule.variables().into_iter().collect();
    let consts: Vec<&String> = consts.iter().collect();
    if !vars.is_empty() && consts.is_empty() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; vars.len()];
    loop {
        let subst: BTreeMap<&str, &String> = vars.iter().map(String::as_str).zip(idx.iter().map(|&i| consts[i])).collect();
        let mut apply = |a: &RelationalAtom| -> Result<GroundAtom, std::convert::Infallible> {
            let args = a
                .args
                .iter()
                .map(|t| match t {
                    Term::Const(c) => c.clone(),
                    Term::Var(v) => subst[v.as_str()].clone(),
                })
                .collect();
            Ok(GroundAtom { predicate: a.predicate.clone(), args })
        };
        let Ok(head) = rule.head.map_atoms(&mut apply);
        let positive = rule.positive.iter().map(|m| m.map_atoms(&mut apply).unwrap_or_else(|e| match e {})).collect();
        let negative = rule.negative.iter().map(|m| m.map_atoms(&mut apply).unwrap_or_else(|e| match e {})).collect();
        out.push(Rule { head, positive, negative });

        // odometer increment, last variable fastest
        let mut k = vars.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < consts.len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// `ground(Π)` over the given constants.
pub fn ground(program: &Program, consts: &BTreeSet<String>) -> GroundProgram {
    GroundProgram::new(program.rules.iter().flat_map(|r| ground_rule(r, consts)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lang::parser::{parse_dataset, parse_program};

    fn consts(cs: &[&str]) -> BTreeSet<String> { cs.iter().map(|c| c.to_string()).collect() }

    #[test]
    fn active_constants_examples() {
        let p = parse_program("NoMoreParacetamol(x) :- Adult(x), diamondminus[0,6] TakesParacetamol(x).").unwrap();
        let d = parse_dataset("TakesParacetamol(John)@8").unwrap();
        assert_eq!(active_constants(&p, &d), consts(&["John"]));

        let p = parse_program("P :- not Q.").unwrap();
        assert_eq!(active_constants(&p, &Dataset::default()), BTreeSet::new());
        let p = parse_program("P(x) :- Q(x).").unwrap();
        assert_eq!(active_constants(&p, &Dataset::default()), consts(&[FRESH_CONSTANT]));

        let p = parse_program("P(A) :- Q(B).").unwrap();
        assert_eq!(active_constants(&p, &Dataset::default()), consts(&["A", "B"]));
    }

    #[test]
    fn ground_examples() {
        let p = parse_program("P(x) :- Q(x).").unwrap();
        let g = ground(&p, &consts(&["A", "B"]));
        assert_eq!(g.to_string(), "P(A) :- Q(A).\nP(B) :- Q(B).\n");

        let p = parse_program("P(A) :- Q(A), not R.").unwrap();
        let g = ground(&p, &consts(&["A", "B"]));
        assert_eq!(g.to_string(), "P(A) :- Q(A), not R.\n");

        let p = parse_program("P(x,y) :- Q(x), R(y).").unwrap();
        assert_eq!(ground(&p, &consts(&["A", "B", "C"])).len(), 9);
    }

    #[test]
    fn duplicates_after_grounding_collapse() {
        // both variables range over one constant, so the two rules coincide
        let p = parse_program("P(x) :- Q(x), Q(y). P(y) :- Q(y), Q(x).").unwrap();
        let g = ground(&p, &consts(&["A"]));
        assert_eq!(g.len(), 1);
        let p = parse_program("P(x) :- Q(x). P(y) :- Q(y).").unwrap();
        assert_eq!(ground(&p, &consts(&["A", "B"])).len(), 2);
    }
}
