//! Seeded instance generation shared by the integration suites. All
//! randomness flows through one fixed-algorithm generator so every suite
//! is reproducible byte-for-byte.

use num::BigInt;
use pfqn::{state_space_size, validate, Instance, Rat};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rational in [-5, 5]: numerator drawn within +/- 5q for denominator q.
pub fn small_rational(rng: &mut ChaCha8Rng) -> Rat {
    let q: i64 = rng.gen_range(1..=4);
    let p: i64 = rng.gen_range(-5 * q..=5 * q);
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Rational in (0, 5]: strictly positive variant.
pub fn positive_rational(rng: &mut ChaCha8Rng) -> Rat {
    let q: i64 = rng.gen_range(1..=4);
    let p: i64 = rng.gen_range(1..=5 * q);
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Desk-scale instance: n <= 4 stations, d <= 3 classes, N_j <= 6, entries
/// rational in [-5, 5]. Instances whose state space exceeds `state_cap`
/// are redrawn so brute-force enumeration stays fast.
pub fn random_instance(rng: &mut ChaCha8Rng, state_cap: u64) -> Instance {
    loop {
        let n = rng.gen_range(1..=4usize);
        let d = rng.gen_range(1..=3usize);
        let theta: Vec<Vec<Rat>> = (0..n)
            .map(|_| (0..d).map(|_| small_rational(rng)).collect())
            .collect();
        let population: Vec<i64> = (0..d).map(|_| rng.gen_range(0..=6i64)).collect();
        let instance = validate(theta, population).expect("generator emits valid instances");
        if state_space_size(&instance) <= BigInt::from(state_cap) {
            return instance;
        }
    }
}

/// All-positive variant of [`random_instance`] (population >= 1 per class),
/// for tests that rely on the probabilistic interpretation.
pub fn random_positive_instance(rng: &mut ChaCha8Rng, state_cap: u64) -> Instance {
    loop {
        let n = rng.gen_range(1..=4usize);
        let d = rng.gen_range(1..=3usize);
        let theta: Vec<Vec<Rat>> = (0..n)
            .map(|_| (0..d).map(|_| positive_rational(rng)).collect())
            .collect();
        let population: Vec<i64> = (0..d).map(|_| rng.gen_range(1..=6i64)).collect();
        let instance = validate(theta, population).expect("generator emits valid instances");
        if state_space_size(&instance) <= BigInt::from(state_cap) {
            return instance;
        }
    }
}
