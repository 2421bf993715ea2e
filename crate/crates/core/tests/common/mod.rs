#![allow(dead_code)]

use mtlog::lang::GroundAtom;
use mtlog::operators::ReasoningInstance;
use mtlog::random::{random_instance, rng_from_seed, InstanceShape};
use rand_chacha::ChaCha8Rng;

/// A generated instance together with the generator, ready for more draws.
pub fn instance(seed: u64) -> (ReasoningInstance, ChaCha8Rng) {
    let mut rng = rng_from_seed(seed);
    let (p, d) = random_instance(&mut rng, &InstanceShape::default());
    (ReasoningInstance::new(&p, d).unwrap(), rng)
}

pub fn atoms(inst: &ReasoningInstance) -> Vec<GroundAtom> { inst.herbrand.iter().cloned().collect() }

pub fn props(names: &[&str]) -> Vec<GroundAtom> { names.iter().map(|n| GroundAtom::prop(*n)).collect() }
