//! Kripke–Kleene, well-founded, supported and stable models.

use super::config::{EngineConfig, EngineError};
use super::report::{ModelKind, ModelReport};
use crate::aft::{self, Pair, WellFoundedError};
use crate::operators::{a_op, ReasoningInstance};
use crate::semantics::{is_model2, Interpretation, ThreeValuedInterpretation};

/// ≤p-least fixpoint of the approximator.
pub fn kripke_kleene_model(inst: &ReasoningInstance, cfg: &EngineConfig) -> Result<ModelReport, EngineError> {
    let fp = aft::kripke_kleene(inst, cfg.max_iters)
        .map_err(|e| EngineError::from_iterates(inst, &[(&e.last.lo, &e.next.lo), (&e.last.hi, &e.next.hi)], e.iterations))?;
    Ok(ModelReport::three(ModelKind::KripkeKleene, fp.value, fp.iterations))
}

/// ≤p-least three-valued stable model.
pub fn well_founded_model(inst: &ReasoningInstance, cfg: &EngineConfig) -> Result<ModelReport, EngineError> {
    let fp = aft::well_founded(inst, cfg.max_iters).map_err(|e| match e {
        WellFoundedError::Revision(e) => EngineError::non_termination(inst, e),
        WellFoundedError::Outer(e) => {
            EngineError::from_iterates(inst, &[(&e.last.lo, &e.next.lo), (&e.last.hi, &e.next.hi)], e.iterations)
        }
    })?;
    Ok(ModelReport::three(ModelKind::WellFounded, fp.value, fp.iterations))
}

/// `J` is a fixpoint of the approximator.
pub fn is_supported_model(inst: &ReasoningInstance, j: &ThreeValuedInterpretation) -> bool {
    j.lo.is_subset(&j.hi) && a_op(inst, j) == *j
}

/// `J` is consistent and a fixpoint of the stable revision operator.
pub fn is_stable3(inst: &ReasoningInstance, j: &ThreeValuedInterpretation, cfg: &EngineConfig) -> Result<bool, EngineError> {
    if !j.lo.is_subset(&j.hi) {
        return Ok(false);
    }
    aft::is_stable_fixpoint(inst, j, cfg.max_iters).map_err(|e| EngineError::non_termination(inst, e))
}

/// `I` is a two-valued model and `(I, I)` a stable fixpoint.
pub fn is_stable2(inst: &ReasoningInstance, i: &Interpretation, cfg: &EngineConfig) -> Result<bool, EngineError> {
    if !is_model2(i, &inst.dataset, &inst.ground_program) {
        return Ok(false);
    }
    is_stable3(inst, &Pair::exact(i.clone()), cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aft::{Approximator, BitLattice, Lattice};
    use crate::lang::{parse_dataset, parse_program, GroundAtom};
    use crate::engines::ModelValue;
    use crate::temporal::{Interval, IntervalSet};

    fn inst(p: &str, d: &str) -> ReasoningInstance {
        ReasoningInstance::new(&parse_program(p).unwrap(), parse_dataset(d).unwrap()).unwrap()
    }

    /// A propositional program at a single timepoint: rules `(head, pos, neg)`
    /// over bit indices. Programs without temporal operators and without
    /// facts behave the same at every timepoint, so this is their semantics
    /// restricted to one point.
    struct Propositional {
        lattice: BitLattice,
        rules: Vec<(u32, Vec<u32>, Vec<u32>)>,
    }

    impl Propositional {
        fn fire(&self, pos_src: u64, neg_src: u64) -> u64 {
            let bit = |m: u64, k: u32| m >> k & 1 == 1;
            self.rules
                .iter()
                .filter(|(_, pos, neg)| pos.iter().all(|&k| bit(pos_src, k)) && neg.iter().all(|&k| !bit(neg_src, k)))
                .fold(0, |acc, (h, _, _)| acc | 1 << h)
        }
    }

    impl Approximator for Propositional {
        type Lattice = BitLattice;
        fn lattice(&self) -> &BitLattice { &self.lattice }
        fn lower(&self, lo: &u64, hi: &u64) -> u64 { self.fire(*lo, *hi) }
        fn upper(&self, lo: &u64, hi: &u64) -> u64 { self.fire(*hi, *lo) }
    }

    fn consistent_pairs(l: &BitLattice) -> Vec<Pair<u64>> {
        let n = 1u64 << l.width;
        (0..n).flat_map(|hi| (0..n).filter(move |lo| lo & !hi == 0).map(move |lo| Pair::new(lo, hi))).collect()
    }

    fn precision_least(l: &BitLattice, ps: &[Pair<u64>]) -> Pair<u64> {
        ps.iter().find(|p| ps.iter().all(|q| p.precision_leq(q, l))).cloned().expect("a least element")
    }

    /// KK and WF by exhaustion over every consistent pair.
    fn oracle(a: &Propositional) -> (Pair<u64>, Pair<u64>) {
        let l = a.lattice;
        let pairs = consistent_pairs(&l);
        let fixpoints: Vec<_> = pairs.iter().filter(|p| a.apply(p) == **p).cloned().collect();
        let least_above = |f: &dyn Fn(u64) -> u64| (0..1u64 << l.width).filter(|&x| f(x) == x).min_by_key(|x| x.count_ones()).unwrap();
        let stable: Vec<_> = pairs
            .iter()
            .filter(|p| least_above(&|x| a.lower(&x, &p.hi)) == p.lo && least_above(&|y| a.upper(&p.lo, &y)) == p.hi)
            .cloned()
            .collect();
        (precision_least(&l, &fixpoints), precision_least(&l, &stable))
    }

    /// Lifts a one-point pair to the whole line; bit k is atom `names[k]`.
    fn lift(p: &Pair<u64>, names: &[&str]) -> ThreeValuedInterpretation {
        let side = |m: u64| -> Interpretation {
            names.iter().enumerate().filter(|(k, _)| m >> k & 1 == 1).map(|(_, n)| (GroundAtom::prop(*n), IntervalSet::full())).collect()
        };
        Pair::new(side(p.lo), side(p.hi))
    }

    fn value(r: &ModelReport) -> ThreeValuedInterpretation {
        match &r.value {
            ModelValue::Three(j) => j.clone(),
            ModelValue::Two(_) => unreachable!(),
        }
    }

    #[test]
    fn classic_programs_against_the_propositional_oracle() {
        let cfg = EngineConfig::default();
        // P = bit 0, Q = bit 1
        let cases: [(&str, Vec<(u32, Vec<u32>, Vec<u32>)>); 4] = [
            ("P :- not Q.", vec![(0, vec![], vec![1])]),
            ("P :- P.", vec![(0, vec![0], vec![])]),
            ("P :- not P.", vec![(0, vec![], vec![0])]),
            ("P :- not Q. Q :- not P.", vec![(0, vec![], vec![1]), (1, vec![], vec![0])]),
        ];
        for (text, rules) in cases {
            let a = Propositional { lattice: BitLattice { width: 2 }, rules };
            let (kk, wf) = oracle(&a);
            let x = inst(text, "");
            assert_eq!(value(&kripke_kleene_model(&x, &cfg).unwrap()), lift(&kk, &["P", "Q"]), "KK of {text}");
            assert_eq!(value(&well_founded_model(&x, &cfg).unwrap()), lift(&wf, &["P", "Q"]), "WF of {text}");
        }
    }

    #[test]
    fn engine_examples() {
        let cfg = EngineConfig::default();
        let x = inst("", "P@[0,1]");
        let kk = kripke_kleene_model(&x, &cfg).unwrap();
        assert!(kk.exact);
        assert_eq!(value(&kk).lo.get(&GroundAtom::prop("P")), &IntervalSet::single(Interval::closed(0, 1)));

        let full_p: Interpretation = [(GroundAtom::prop("P"), IntervalSet::full())].into_iter().collect();
        let x = inst("P :- not Q.", "");
        assert_eq!(value(&kripke_kleene_model(&x, &cfg).unwrap()), Pair::exact(full_p.clone()));
        assert_eq!(value(&well_founded_model(&x, &cfg).unwrap()), Pair::exact(full_p.clone()));
        assert!(is_stable2(&x, &full_p, &cfg).unwrap());

        let x = inst("P :- P.", "");
        assert_eq!(value(&kripke_kleene_model(&x, &cfg).unwrap()), Pair::new(Interpretation::new(), full_p.clone()));
        assert_eq!(value(&well_founded_model(&x, &cfg).unwrap()), Pair::exact(Interpretation::new()));
        assert!(is_supported_model(&x, &Pair::exact(full_p.clone())));
        assert!(!is_stable2(&x, &full_p, &cfg).unwrap());

        let x = inst("P :- not P.", "");
        assert_eq!(value(&well_founded_model(&x, &cfg).unwrap()), Pair::new(Interpretation::new(), full_p.clone()));
        assert!(!is_stable2(&x, &full_p, &cfg).unwrap());
    }

    #[test]
    fn supported_models() {
        let cfg = EngineConfig::default();
        let x = inst("Q :- diamondminus[0,2] P, not R.", "P@[0,1]\nR@3");
        let kk = value(&kripke_kleene_model(&x, &cfg).unwrap());
        assert!(is_supported_model(&x, &kk));
        let mut bogus = kk.lo.clone();
        bogus.set(GroundAtom::prop("R"), IntervalSet::full());
        assert!(!is_supported_model(&x, &Pair::exact(bogus)));
        let wf = value(&well_founded_model(&x, &cfg).unwrap());
        assert!(is_stable3(&x, &wf, &cfg).unwrap());
        assert_eq!(wf.lo.get(&GroundAtom::prop("Q")), &IntervalSet::from_points([0, 1, 2]));
    }

    #[test]
    fn unbounded_growth_is_reported() {
        let x = inst("P :- diamondminus[1,1] P.", "P@0");
        let cfg = EngineConfig { max_iters: 50, ..EngineConfig::default() };
        match kripke_kleene_model(&x, &cfg) {
            Err(EngineError::NonTermination { diagnostic, .. }) => {
                assert!(diagnostic.contains("P:"), "{diagnostic}");
                assert!(diagnostic.contains("via P :- diamondminus[1,1] P."), "{diagnostic}");
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(well_founded_model(&x, &cfg), Err(EngineError::NonTermination { .. })));
        let lattice = x.interp_lattice();
        assert!(lattice.leq(&lattice.bottom(), &lattice.top()));
    }
}
