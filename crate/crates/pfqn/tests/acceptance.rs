//! Acceptance gate: seven release criteria, one test per criterion, each
//! printing a single PASS/FAIL line (run with `--nocapture` to see them).
//! Every numeric expectation here is either hand-derivable or pinned to an
//! independent oracle; the suites never compare an algorithm to itself.

mod common;

use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::time::Instant;

use num::BigInt;
use pfqn::combinatorics::binomial;
use pfqn::scalar::{int, pow, ratio};
use pfqn::{
    bruteforce_g, convolution_g, enumerate_states, explicit2_g, g_to_j, monomial_integrate_j,
    run_algorithm, state_probability, validate, Algorithm, Error, Guards, Instance, Rat,
};

fn report(label: &str, body: impl FnOnce()) {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(()) => println!("{label}: PASS"),
        Err(cause) => {
            println!("{label}: FAIL");
            resume_unwind(cause);
        }
    }
}

fn inst(entries: &[&[i64]], population: &[i64]) -> Instance {
    let theta = entries
        .iter()
        .map(|row| row.iter().map(|&v| int(v)).collect())
        .collect();
    validate(theta, population.to_vec()).unwrap()
}

#[test]
fn criterion_1_golden_values() {
    report("criterion 1 (golden values)", || {
        let guards = Guards::default();
        type Case = (&'static [&'static [i64]], &'static [i64], Rat, Rat);
        let cases: [Case; 3] = [
            (&[&[1], &[2]], &[2], int(7), ratio(7, 3)),
            (&[&[1, 1], &[2, 3]], &[1, 1], int(19), ratio(19, 6)),
            (&[&[1], &[-1]], &[2], int(1), ratio(1, 3)),
        ];
        for (entries, population, g, j) in cases {
            let instance = inst(entries, population);
            assert_eq!(convolution_g(&instance).value, g);
            assert_eq!(bruteforce_g(&instance, &guards).unwrap().value, g);
            assert_eq!(g_to_j(&g, &instance), j);
        }
        // all-ones matrix: every state has weight 1, so G counts states
        for n in [1usize, 2, 3, 7, 20] {
            for population in [0i64, 1, 5, 20] {
                let theta = vec![vec![int(1)]; n];
                let instance = validate(theta, vec![population]).unwrap();
                let expected = binomial(population as u64 + n as u64 - 1, n as u64 - 1);
                assert_eq!(convolution_g(&instance).value, Rat::from_integer(expected));
            }
        }
        // empty population: G = 1 and J = the simplex volume 1/(n-1)!
        let mut factorial = BigInt::from(1);
        for n in 1u64..=6 {
            if n > 1 {
                factorial *= BigInt::from(n - 1);
            }
            let theta: Vec<Vec<Rat>> = (1..=n as i64).map(|i| vec![int(i)]).collect();
            let instance = validate(theta, vec![0]).unwrap();
            assert_eq!(convolution_g(&instance).value, int(1));
            assert_eq!(
                g_to_j(&int(1), &instance),
                Rat::new(BigInt::from(1), factorial.clone())
            );
        }
        let two_class = inst(&[&[4, 7], &[1, 3], &[2, 2]], &[0, 0]);
        assert_eq!(convolution_g(&two_class).value, int(1));
        assert_eq!(g_to_j(&int(1), &two_class), ratio(1, 2));
    });
}

const FAMILY_SEED: u64 = 20250814;
const FAMILY_SIZE: usize = 200;
const STATE_CAP: u64 = 60_000;

#[test]
fn criterion_2_cross_algorithm_agreement() {
    report(
        "criterion 2 (cross-algorithm agreement, 200 instances)",
        || {
            let started = Instant::now();
            let guards = Guards::default();
            let mut rng = common::seeded(FAMILY_SEED);
            let g_algorithms = [
                Algorithm::Convolution,
                Algorithm::Recal,
                Algorithm::Koe58,
                Algorithm::Gen,
                Algorithm::Explicit1,
                Algorithm::ExplicitRepeated,
                Algorithm::Explicit2,
                Algorithm::Taylor,
            ];
            let mut exercised = vec![0usize; g_algorithms.len()];
            for _ in 0..FAMILY_SIZE {
                let instance = common::random_instance(&mut rng, STATE_CAP);
                let reference = bruteforce_g(&instance, &guards).unwrap().value;
                for (slot, &algorithm) in g_algorithms.iter().enumerate() {
                    match run_algorithm(&instance, algorithm, &guards) {
                        Ok(result) => {
                            assert_eq!(
                                result.value,
                                reference,
                                "{} disagrees with enumeration on {:?}",
                                algorithm.name(),
                                instance
                            );
                            exercised[slot] += 1;
                        }
                        // precondition failures mean "not applicable here"
                        Err(Error::WrongClassCount { .. })
                        | Err(Error::RepeatedCoefficients)
                        | Err(Error::DegenerateDenominator { .. }) => {}
                        Err(other) => panic!("unexpected error from {}: {other}", algorithm.name()),
                    }
                }
            }
            // the family must actually reach every algorithm, including the
            // single-class-only ones
            for (slot, &algorithm) in g_algorithms.iter().enumerate() {
                let floor = match algorithm {
                    Algorithm::Koe58 => 20,
                    Algorithm::Gen => 40,
                    Algorithm::Explicit1 | Algorithm::ExplicitRepeated => 100,
                    _ => FAMILY_SIZE,
                };
                assert!(
                    exercised[slot] >= floor,
                    "{} exercised on only {} of {} instances",
                    algorithm.name(),
                    exercised[slot],
                    FAMILY_SIZE
                );
            }
            assert!(
                started.elapsed().as_secs() < 60,
                "agreement sweep exceeded 60 s"
            );
        },
    );
}

#[test]
fn criterion_3_g_to_j_matches_direct_integration() {
    report(
        "criterion 3 (G-to-J conversion vs direct integration)",
        || {
            let guards = Guards::default();
            let mut rng = common::seeded(FAMILY_SEED);
            for _ in 0..FAMILY_SIZE {
                let instance = common::random_instance(&mut rng, STATE_CAP);
                let from_g = g_to_j(&convolution_g(&instance).value, &instance);
                let direct = monomial_integrate_j(&instance, &guards).unwrap().value;
                assert_eq!(from_g, direct, "conversion mismatch on {instance:?}");
            }
        },
    );
}

#[test]
fn criterion_4_structural_properties() {
    report(
        "criterion 4 (structural invariances, 50 instances each)",
        || {
            use rand::seq::SliceRandom;
            use rand::Rng;
            let mut rng = common::seeded(FAMILY_SEED + 1);
            for _ in 0..50 {
                let instance = common::random_instance(&mut rng, STATE_CAP);
                let baseline = convolution_g(&instance).value;
                let d = instance.d();
                let rows: Vec<Vec<Rat>> = instance.theta().rows().map(|r| r.to_vec()).collect();
                let population: Vec<i64> = instance
                    .population()
                    .counts()
                    .iter()
                    .map(|&c| c as i64)
                    .collect();

                // column homogeneity: scaling class j's column scales G by c^{N_j}
                let class = rng.gen_range(0..d);
                let scale = loop {
                    let c = common::small_rational(&mut rng);
                    if !num::Zero::is_zero(&c) {
                        break c;
                    }
                };
                let scaled: Vec<Vec<Rat>> = rows
                    .iter()
                    .map(|row| {
                        let mut row = row.clone();
                        row[class] = &row[class] * &scale;
                        row
                    })
                    .collect();
                let scaled_instance = validate(scaled, population.clone()).unwrap();
                assert_eq!(
                    convolution_g(&scaled_instance).value,
                    pow(&scale, instance.population().get(class)) * &baseline
                );

                // zero-row invariance: an all-zero station contributes nothing
                let mut padded = rows.clone();
                padded.push(vec![int(0); d]);
                let padded_instance = validate(padded, population.clone()).unwrap();
                assert_eq!(convolution_g(&padded_instance).value, baseline);

                // row-permutation invariance
                let mut shuffled = rows.clone();
                shuffled.shuffle(&mut rng);
                let shuffled_instance = validate(shuffled, population.clone()).unwrap();
                assert_eq!(convolution_g(&shuffled_instance).value, baseline);

                // simultaneous column/population permutation invariance
                let mut order: Vec<usize> = (0..d).collect();
                order.shuffle(&mut rng);
                let permuted_rows: Vec<Vec<Rat>> = rows
                    .iter()
                    .map(|row| order.iter().map(|&j| row[j].clone()).collect())
                    .collect();
                let permuted_pop: Vec<i64> = order.iter().map(|&j| population[j]).collect();
                let permuted_instance = validate(permuted_rows, permuted_pop).unwrap();
                assert_eq!(convolution_g(&permuted_instance).value, baseline);
            }
        },
    );
}

#[test]
fn criterion_5_work_counters_and_wall_time() {
    report(
        "criterion 5 (complexity reproduction via work counters)",
        || {
            let mut rng = common::seeded(FAMILY_SEED + 2);
            let single_class = |rng: &mut rand_chacha::ChaCha8Rng, n: usize, total: i64| {
                let theta: Vec<Vec<Rat>> = (0..n)
                    .map(|_| vec![common::positive_rational(rng)])
                    .collect();
                validate(theta, vec![total]).unwrap()
            };
            // convolution table size is (n+1)(N+1) for d = 1
            for total in [50i64, 100, 200] {
                let instance = single_class(&mut rng, 4, total);
                let result = convolution_g(&instance);
                assert_eq!(result.work.table_cells, 5 * (total as u64 + 1));
            }
            // explicit2 term count is C(N+n, n); kept to moderate N because
            // every one of those terms is a big-rational power
            for total in [5i64, 10, 20, 50] {
                let instance = single_class(&mut rng, 4, total);
                let result = explicit2_g(&instance);
                assert_eq!(
                    BigInt::from(result.work.terms),
                    binomial(total as u64 + 4, 4)
                );
                assert_eq!(result.value, convolution_g(&instance).value);
            }
            // wall-clock bound for the big single-class table
            let instance = single_class(&mut rng, 4, 500);
            let started = Instant::now();
            let result = convolution_g(&instance);
            let elapsed = started.elapsed();
            assert_eq!(result.work.table_cells, 5 * 501);
            assert!(
                elapsed.as_secs_f64() < 5.0,
                "convolution at N=500 took {elapsed:?}"
            );
        },
    );
}

#[test]
fn criterion_6_printed_sign_convention() {
    report(
        "criterion 6 (printed denominator ordering regression)",
        || {
            // the source's printed ordering prod_{k!=i}(theta_k - theta_i)
            // differs from the divided-difference ordering by (-1)^{n-1}
            let printed = |instance: &Instance| {
                let n = instance.n();
                let exponent = instance.total_population() + n as u64 - 1;
                let mut total = Rat::zero();
                for i in 0..n {
                    let mut denominator = Rat::one();
                    for k in 0..n {
                        if k != i {
                            denominator *=
                                instance.theta().entry(k, 0) - instance.theta().entry(i, 0);
                        }
                    }
                    total += pow(instance.theta().entry(i, 0), exponent) / denominator;
                }
                total
            };
            use num::{One, Zero};
            let pairs = inst(&[&[1], &[2]], &[2]);
            assert_eq!(printed(&pairs), -convolution_g(&pairs).value);
            let triples = inst(&[&[1], &[2], &[4]], &[1]);
            assert_eq!(printed(&triples), convolution_g(&triples).value);
            // seeded rational coefficients, both parities
            let mut rng = common::seeded(FAMILY_SEED + 3);
            for n in [2usize, 3] {
                for _ in 0..10 {
                    let mut coeffs: Vec<Rat> = Vec::new();
                    while coeffs.len() < n {
                        let candidate = common::small_rational(&mut rng);
                        if !coeffs.contains(&candidate) {
                            coeffs.push(candidate);
                        }
                    }
                    let theta: Vec<Vec<Rat>> = coeffs.into_iter().map(|c| vec![c]).collect();
                    let instance = validate(theta, vec![3]).unwrap();
                    let expected = if n % 2 == 0 {
                        -convolution_g(&instance).value
                    } else {
                        convolution_g(&instance).value
                    };
                    assert_eq!(printed(&instance), expected);
                }
            }
        },
    );
}

#[test]
fn criterion_7_probability_normalization() {
    report("criterion 7 (state probabilities sum to one)", || {
        let guards = Guards::default();
        let mut rng = common::seeded(FAMILY_SEED + 4);
        for _ in 0..20 {
            let instance = common::random_positive_instance(&mut rng, 300);
            let total: Rat = enumerate_states(&instance)
                .map(|state| state_probability(&instance, &state, &guards).unwrap())
                .sum();
            assert_eq!(
                total,
                int(1),
                "probabilities do not normalize on {instance:?}"
            );
        }
    });
}
