//! Cost-based algorithm selection and a single entry point that runs any
//! algorithm by identifier.

use num::BigInt;

use crate::combinatorics::binomial;
use crate::error::Error;
use crate::explicit::{explicit1_g, explicit2_g, explicit_repeated_g, gen_g, koe58_g};
use crate::instance::Instance;
use crate::oracles::{bruteforce_g, monomial_integrate_j, taylor_g, Guards};
use crate::recurrences::{convolution_g, recal_g, RowMultiplicity};
use crate::result::{Algorithm, ComputationResult};

/// Predicted convolution work: n * prod_j (N_j + 1) population-lattice
/// sweeps (the filled table has one extra layer, but selection only needs
/// relative cost).
pub fn convolution_work_estimate(instance: &Instance) -> BigInt {
    let mut estimate = BigInt::from(instance.n() as u64);
    for &count in instance.population().counts() {
        estimate *= BigInt::from(count + 1);
    }
    estimate
}

/// Predicted number of multiplicity-vector subproblems the row-repetition
/// recursion memoizes: C(N + n', n') with n' the distinct-row count. This
/// is exactly the subproblem count recal_g reports as work.
pub fn recal_state_estimate(instance: &Instance) -> BigInt {
    let distinct = RowMultiplicity::from_theta(instance).distinct() as u64;
    binomial(instance.total_population() + distinct, distinct)
}

/// Pick the cheaper of the two table algorithms from the estimates alone
/// (never from timing, so the choice is reproducible); ties go to
/// convolution.
pub fn auto_select(instance: &Instance) -> Algorithm {
    if recal_state_estimate(instance) < convolution_work_estimate(instance) {
        Algorithm::Recal
    } else {
        Algorithm::Convolution
    }
}

/// Run one algorithm by identifier. The result's quantity is G for all but
/// the monomial integrator, which natively produces J.
pub fn run_algorithm(
    instance: &Instance,
    algorithm: Algorithm,
    guards: &Guards,
) -> Result<ComputationResult, Error> {
    match algorithm {
        Algorithm::Convolution => Ok(convolution_g(instance)),
        Algorithm::Recal => Ok(recal_g(instance)),
        Algorithm::Koe58 => koe58_g(instance),
        Algorithm::Gen => gen_g(instance),
        Algorithm::Explicit1 => explicit1_g(instance),
        Algorithm::ExplicitRepeated => explicit_repeated_g(instance),
        Algorithm::Explicit2 => Ok(explicit2_g(instance)),
        Algorithm::Taylor => Ok(taylor_g(instance)),
        Algorithm::BruteForce => bruteforce_g(instance, guards),
        Algorithm::Monomial => monomial_integrate_j(instance, guards),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::validate;
    use crate::result::Quantity;
    use crate::scalar::int;

    fn inst(entries: &[&[i64]], population: &[i64]) -> Instance {
        let theta = entries
            .iter()
            .map(|r| r.iter().map(|&v| int(v)).collect())
            .collect();
        validate(theta, population.to_vec()).unwrap()
    }

    #[test]
    fn estimates_match_design_formulas() {
        let instance = inst(&[&[1], &[2]], &[2]);
        assert_eq!(convolution_work_estimate(&instance), BigInt::from(6));
        assert_eq!(recal_state_estimate(&instance), BigInt::from(6));
        // folding reduces the recursion estimate
        let folded = inst(&[&[1], &[1], &[1]], &[2]);
        assert_eq!(recal_state_estimate(&folded), BigInt::from(3));
    }

    #[test]
    fn selection_is_deterministic_and_tie_breaks_to_convolution() {
        // tie at 6 vs 6
        assert_eq!(
            auto_select(&inst(&[&[1], &[2]], &[2])),
            Algorithm::Convolution
        );
        // many repeated rows favor the recursion: C(2+1,1)=3 < 3*3=9
        assert_eq!(
            auto_select(&inst(&[&[1], &[1], &[1]], &[2])),
            Algorithm::Recal
        );
        // large population with distinct rows favors convolution:
        // 3*11 = 33 < C(13,3) = 286
        let deep = inst(&[&[1], &[2], &[3]], &[10]);
        assert_eq!(auto_select(&deep), Algorithm::Convolution);
        // few jobs over many distinct rows favors the recursion:
        // C(1+4,4) = 5 < 4*2 = 8
        let shallow = inst(&[&[1], &[2], &[3], &[4]], &[1]);
        assert_eq!(auto_select(&shallow), Algorithm::Recal);
    }

    #[test]
    fn runner_reaches_every_algorithm() {
        let guards = Guards::default();
        let single_class = inst(&[&[1], &[2]], &[2]);
        for algorithm in Algorithm::ALL {
            let result = run_algorithm(&single_class, algorithm, &guards).unwrap();
            match algorithm {
                Algorithm::Monomial => {
                    assert_eq!(result.quantity, Quantity::J);
                    assert_eq!(result.value, crate::scalar::ratio(7, 3));
                }
                _ => {
                    assert_eq!(result.quantity, Quantity::G);
                    assert_eq!(result.value, int(7));
                }
            }
            assert_eq!(result.algorithm, algorithm);
        }
    }

    #[test]
    fn runner_surfaces_precondition_errors() {
        let guards = Guards::default();
        let multi = inst(&[&[1, 1], &[2, 3]], &[1, 1]);
        assert!(matches!(
            run_algorithm(&multi, Algorithm::Koe58, &guards),
            Err(Error::WrongClassCount { d: 2 })
        ));
        let repeated = inst(&[&[1], &[1]], &[2]);
        assert!(matches!(
            run_algorithm(&repeated, Algorithm::Koe58, &guards),
            Err(Error::RepeatedCoefficients)
        ));
    }
}
