use std::collections::BTreeSet;

use mtlog::lang::ground::ground_rule;
use mtlog::lang::{parse_program, Program};
use mtlog::random::{random_instance, rng_from_seed, InstanceShape};
use proptest::prelude::*;

fn consts(n: usize) -> BTreeSet<String> { (0..n).map(|k| format!("K{k}")).collect() }

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn printing_then_parsing_is_identity(seed in any::<u64>()) {
        let shape = InstanceShape { max_idb: 4, max_rules: 5, max_body_literals: 3, max_depth: 3, max_delta: 5, ..InstanceShape::default() };
        let (p, d) = random_instance(&mut rng_from_seed(seed), &shape);
        prop_assert_eq!(parse_program(&p.to_string()).unwrap(), p);
        prop_assert_eq!(mtlog::lang::parse_dataset(&d.to_string()).unwrap(), d);
    }

    #[test]
    fn grounding_counts(nvars in 0usize..=3, nconsts in 1usize..=4, negated in any::<bool>()) {
        let vars: Vec<String> = (0..nvars).map(|k| format!("x{k}")).collect();
        let args = vars.join(",");
        let body_atoms: Vec<String> = vars.iter().map(|v| format!("Q({v})")).collect();
        let mut body = if body_atoms.is_empty() { "B".to_owned() } else { body_atoms.join(", ") };
        if negated && nvars > 0 {
            body.push_str(&format!(", not R({})", vars[0]));
        }
        let head = if nvars == 0 { "P".to_owned() } else { format!("P({args})") };
        let program: Program = parse_program(&format!("{head} :- {body}.")).unwrap();
        let rules = ground_rule(&program.rules[0], &consts(nconsts));
        prop_assert_eq!(rules.len(), nconsts.pow(nvars as u32));
        for r in &rules {
            for a in r.atoms() {
                prop_assert!(a.args.iter().all(|c| consts(nconsts).contains(c)));
            }
        }
    }
}

#[test]
fn negative_metric_intervals_are_rejected() {
    for text in ["P :- diamondminus[-1,2] Q.", "P :- Q S[-3,0] R.", "boxplus[-1,0] P :- Q."] {
        assert!(parse_program(text).is_err(), "{text}");
    }
}
