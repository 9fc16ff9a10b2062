//! Closed-form summation formulas for G: divided differences over the
//! station coefficients for a single class (distinct and repeated), and
//! three box-sum expressions valid for several classes.
//!
//! All denominators use the divided-difference ordering (theta_i - theta_k);
//! see `koe58_g` for the sign convention and its regression test.

use num::{One, Zero};

use crate::combinatorics::{binomial, compositions, Factorials};
use crate::error::Error;
use crate::instance::Instance;
use crate::lattice::BoxLattice;
use crate::result::{Algorithm, ComputationResult, Quantity, WorkCounters};
use crate::scalar::{pow, Rat};
use crate::theta::ThetaMatrix;

/// Matrix rows collapsed into pairwise-distinct representatives with their
/// repeat counts m_j >= 1 (first-occurrence order, sum of counts = n).
/// The repeated-coefficient formulas sum over these groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientGroups {
    distinct: Vec<Vec<Rat>>,
    mult: Vec<u64>,
}

impl CoefficientGroups {
    pub fn group_rows(theta: &ThetaMatrix) -> Self {
        let mut distinct: Vec<Vec<Rat>> = Vec::new();
        let mut mult: Vec<u64> = Vec::new();
        for row in theta.rows() {
            match distinct.iter().position(|seen| seen.as_slice() == row) {
                Some(found) => mult[found] += 1,
                None => {
                    distinct.push(row.to_vec());
                    mult.push(1);
                }
            }
        }
        CoefficientGroups { distinct, mult }
    }

    /// Number of distinct groups, n'.
    pub fn count(&self) -> usize {
        self.distinct.len()
    }

    pub fn distinct(&self) -> &[Vec<Rat>] {
        &self.distinct
    }

    pub fn multiplicities(&self) -> &[u64] {
        &self.mult
    }
}

fn alternating(parity: u64) -> Rat {
    if parity.is_multiple_of(2) {
        Rat::one()
    } else {
        -Rat::one()
    }
}

fn big(value: num::BigInt) -> Rat {
    Rat::from_integer(value)
}

/// Single-class G as the divided difference of z^{N+n-1} over the n
/// station coefficients: sum_i theta_i^{N+n-1} / prod_{k!=i} (theta_i -
/// theta_k). Requires pairwise-distinct coefficients; the repeated case is
/// `gen_g`. Exactly one term per station.
pub fn koe58_g(instance: &Instance) -> Result<ComputationResult, Error> {
    if instance.d() != 1 {
        return Err(Error::WrongClassCount { d: instance.d() });
    }
    let coeffs: Vec<&Rat> = (0..instance.n())
        .map(|i| instance.theta().entry(i, 0))
        .collect();
    for i in 0..coeffs.len() {
        for k in i + 1..coeffs.len() {
            if coeffs[i] == coeffs[k] {
                return Err(Error::RepeatedCoefficients);
            }
        }
    }
    let exponent = instance.total_population() + instance.n() as u64 - 1;
    let mut total = Rat::zero();
    let mut terms = 0u64;
    for (i, theta_i) in coeffs.iter().enumerate() {
        terms += 1;
        let mut denominator = Rat::one();
        for (k, theta_k) in coeffs.iter().enumerate() {
            if k != i {
                denominator *= *theta_i - *theta_k;
            }
        }
        total += pow(theta_i, exponent) / denominator;
    }
    Ok(ComputationResult {
        quantity: Quantity::G,
        value: total,
        algorithm: Algorithm::Koe58,
        work: WorkCounters::term_count(terms),
    })
}

/// Single-class G with repeated coefficients permitted: the confluent form
/// of `koe58_g`. Coefficients fold into groups (theta_j, m_j); each group
/// contributes
///
///   (-1)^{m_j-1} theta_j^{N+n-m_j} sum_r (-1)^{r_j} C(N+r_j, r_j)
///       prod_{k!=j} C(m_k+r_k-1, r_k) theta_k^{r_k}
///                   / (theta_j - theta_k)^{m_k+r_k}
///
/// where r ranges over all n'-vectors >= 0 with sum m_j - 1 (the group's
/// own coordinate r_j participates in the constraint). With all m_j = 1
/// this is exactly the distinct-coefficient sum.
pub fn gen_g(instance: &Instance) -> Result<ComputationResult, Error> {
    if instance.d() != 1 {
        return Err(Error::WrongClassCount { d: instance.d() });
    }
    let groups = CoefficientGroups::group_rows(instance.theta());
    let coeffs: Vec<&Rat> = groups.distinct().iter().map(|row| &row[0]).collect();
    let mult = groups.multiplicities();
    let n = instance.n() as u64;
    let total_pop = instance.total_population();
    let mut total = Rat::zero();
    let mut terms = 0u64;
    for j in 0..groups.count() {
        let lead = alternating(mult[j] - 1) * pow(coeffs[j], total_pop + n - mult[j]);
        let mut inner = Rat::zero();
        for r in compositions(mult[j] - 1, groups.count()) {
            terms += 1;
            let mut product = alternating(r[j]) * big(binomial(total_pop + r[j], r[j]));
            for k in 0..groups.count() {
                if k == j {
                    continue;
                }
                product *= big(binomial(mult[k] + r[k] - 1, r[k]));
                product *= pow(coeffs[k], r[k]);
                product /= pow(&(coeffs[j] - coeffs[k]), mult[k] + r[k]);
            }
            inner += product;
        }
        total += lead * inner;
    }
    Ok(ComputationResult {
        quantity: Quantity::G,
        value: total,
        algorithm: Algorithm::Gen,
        work: WorkCounters::term_count(terms),
    })
}

/// Aggregate coefficients x_i = sum_j t_j theta_ij for one box point t.
fn aggregates(instance: &Instance, t: &[u64]) -> Vec<Rat> {
    (0..instance.n())
        .map(|i| {
            let mut x = Rat::zero();
            for (j, &t_j) in t.iter().enumerate() {
                if t_j > 0 {
                    x += instance.theta().entry(i, j) * big(t_j.into());
                }
            }
            x
        })
        .collect()
}

/// Sign and binomial weight shared by the box sums:
/// (-1)^{sum_j (N_j - t_j)} prod_j C(N_j, t_j).
fn box_weight(population: &[u64], t: &[u64]) -> Rat {
    let parity: u64 = population.iter().zip(t).map(|(&n_j, &t_j)| n_j - t_j).sum();
    let mut weight = alternating(parity);
    for (&n_j, &t_j) in population.iter().zip(t) {
        weight *= big(binomial(n_j, t_j));
    }
    weight
}

/// Multiclass G as an alternating sum over the box 0 <= t <= N of
/// single-point divided differences:
///
///   (1/prod_j N_j!) sum_t (-1)^{N-t} prod_j C(N_j, t_j)
///       sum_i x_i^{N+n-1} / prod_{k!=i} (x_i - x_k),   x_i = sum_j t_j theta_ij.
///
/// The t = 0 point contributes 0 (all aggregates vanish) and the whole sum
/// is 1 when N = 0. Aggregate collisions x_i = x_k at some t != 0 leave the
/// printed term undefined; they surface as DegenerateDenominator the moment
/// they are encountered. Term count: one per (t, station) pair, n * prod_j
/// (N_j + 1) in all.
pub fn explicit1_g(instance: &Instance) -> Result<ComputationResult, Error> {
    let n = instance.n();
    let population = instance.population().counts();
    let exponent = instance.total_population() + n as u64 - 1;
    let lattice = BoxLattice::new(population);
    let mut total = Rat::zero();
    let mut terms = 0u64;
    for t in lattice.iter() {
        if t.iter().all(|&v| v == 0) {
            terms += n as u64;
            continue;
        }
        let x = aggregates(instance, &t);
        let weight = box_weight(population, &t);
        for i in 0..n {
            terms += 1;
            let mut denominator = Rat::one();
            for k in 0..n {
                if k == i {
                    continue;
                }
                let factor = &x[i] - &x[k];
                if factor.is_zero() {
                    return Err(Error::DegenerateDenominator { t, i, k });
                }
                denominator *= factor;
            }
            total += &weight * pow(&x[i], exponent) / denominator;
        }
    }
    let value = if instance.population().is_zero() {
        Rat::one()
    } else {
        let factorials = Factorials::up_to(instance.total_population());
        let mut divisor = Rat::one();
        for &n_j in population {
            divisor *= big(factorials.factorial(n_j).clone());
        }
        total / divisor
    };
    Ok(ComputationResult {
        quantity: Quantity::G,
        value,
        algorithm: Algorithm::Explicit1,
        work: WorkCounters::term_count(terms),
    })
}

/// Multiclass G with repeated rows: `explicit1_g` with the per-point
/// divided difference replaced by its confluent form over row groups, the
/// same structure as `gen_g` but with the group aggregates x_j(t) in place
/// of the single-class coefficients and the total population N in place of
/// the single class count:
///
///   (1/prod_j N_j!) sum_t (-1)^{N-t} prod_j C(N_j, t_j)
///     sum_{groups j} (-1)^{m_j-1} x_j^{N+n-m_j}
///       sum_r (-1)^{r_j} C(N+r_j, r_j)
///         prod_{k!=j} C(m_k+r_k-1, r_k) x_k^{r_k} / (x_j - x_k)^{m_k+r_k}.
///
/// Rows group by exact whole-row equality. Distinct groups whose aggregates
/// collide at some t != 0 raise DegenerateDenominator. With every m_j = 1
/// this reduces termwise to `explicit1_g`.
pub fn explicit_repeated_g(instance: &Instance) -> Result<ComputationResult, Error> {
    let groups = CoefficientGroups::group_rows(instance.theta());
    let mult = groups.multiplicities().to_vec();
    let n_groups = groups.count();
    let n = instance.n() as u64;
    let population = instance.population().counts();
    let total_pop = instance.total_population();
    let comps: Vec<Vec<Vec<u64>>> = mult
        .iter()
        .map(|&m_j| compositions(m_j - 1, n_groups))
        .collect();
    let inner_terms: u64 = comps.iter().map(|c| c.len() as u64).sum();
    let lattice = BoxLattice::new(population);
    let mut total = Rat::zero();
    let mut terms = 0u64;
    for t in lattice.iter() {
        if t.iter().all(|&v| v == 0) {
            terms += inner_terms;
            continue;
        }
        // aggregates per group, from each group's representative row
        let x: Vec<Rat> = groups
            .distinct()
            .iter()
            .map(|row| {
                let mut value = Rat::zero();
                for (s, &t_s) in t.iter().enumerate() {
                    if t_s > 0 {
                        value += &row[s] * big(t_s.into());
                    }
                }
                value
            })
            .collect();
        for j in 0..n_groups {
            for k in 0..n_groups {
                if k != j && x[j] == x[k] {
                    return Err(Error::DegenerateDenominator { t, i: j, k });
                }
            }
        }
        let weight = box_weight(population, &t);
        let mut point_sum = Rat::zero();
        for j in 0..n_groups {
            let lead = alternating(mult[j] - 1) * pow(&x[j], total_pop + n - mult[j]);
            let mut inner = Rat::zero();
            for r in &comps[j] {
                terms += 1;
                let mut product = alternating(r[j]) * big(binomial(total_pop + r[j], r[j]));
                for k in 0..n_groups {
                    if k == j {
                        continue;
                    }
                    product *= big(binomial(mult[k] + r[k] - 1, r[k]));
                    product *= pow(&x[k], r[k]);
                    product /= pow(&(&x[j] - &x[k]), mult[k] + r[k]);
                }
                inner += product;
            }
            point_sum += lead * inner;
        }
        total += weight * point_sum;
    }
    let value = if instance.population().is_zero() {
        Rat::one()
    } else {
        let factorials = Factorials::up_to(total_pop);
        let mut divisor = Rat::one();
        for &n_j in population {
            divisor *= big(factorials.factorial(n_j).clone());
        }
        total / divisor
    };
    Ok(ComputationResult {
        quantity: Quantity::G,
        value,
        algorithm: Algorithm::ExplicitRepeated,
        work: WorkCounters::term_count(terms),
    })
}

/// Multiclass G as a sum over station allocations h >= 0 with
/// h_1 + ... + h_n <= N:
///
///   (1/prod_j N_j!) sum_h (-1)^{N-h} C(N+n-1, N-h)
///       prod_j (sum_i h_i theta_ij)^{N_j}
///
/// where N-h abbreviates N - (h_1+...+h_n). No distinctness conditions of
/// any kind: this is the formula of last resort when aggregates collide.
/// Term count: C(N+n, n), one per lattice point h.
pub fn explicit2_g(instance: &Instance) -> ComputationResult {
    let n = instance.n();
    let total_pop = instance.total_population();
    let population = instance.population().counts();
    let factorials = Factorials::up_to(total_pop + n as u64 - 1);
    let mut total = Rat::zero();
    let mut terms = 0u64;
    for level in 0..=total_pop {
        let sign = alternating(total_pop - level);
        let weight = big(factorials.binomial(total_pop + n as u64 - 1, total_pop - level));
        for h in compositions(level, n) {
            terms += 1;
            let mut product = &sign * &weight;
            for (j, &n_j) in population.iter().enumerate() {
                let mut aggregate = Rat::zero();
                for (i, &h_i) in h.iter().enumerate() {
                    if h_i > 0 {
                        aggregate += instance.theta().entry(i, j) * big(h_i.into());
                    }
                }
                product *= pow(&aggregate, n_j);
            }
            total += product;
        }
    }
    let mut divisor = Rat::one();
    for &n_j in population {
        divisor *= big(factorials.factorial(n_j).clone());
    }
    ComputationResult {
        quantity: Quantity::G,
        value: total / divisor,
        algorithm: Algorithm::Explicit2,
        work: WorkCounters::term_count(terms),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::validate;
    use crate::recurrences::convolution_g;
    use crate::scalar::{int, ratio};
    use num::BigInt;

    fn inst(entries: &[&[i64]], population: &[i64]) -> Instance {
        let theta = entries
            .iter()
            .map(|r| r.iter().map(|&v| int(v)).collect())
            .collect();
        validate(theta, population.to_vec()).unwrap()
    }

    #[test]
    fn grouping_by_full_row() {
        let theta = inst(&[&[1, 1], &[2, 3], &[1, 1]], &[1, 1]);
        let groups = CoefficientGroups::group_rows(theta.theta());
        assert_eq!(groups.count(), 2);
        assert_eq!(groups.multiplicities(), &[2, 1]);
        assert_eq!(groups.distinct()[1], vec![int(2), int(3)]);
    }

    #[test]
    fn koe58_desk_values() {
        let result = koe58_g(&inst(&[&[1], &[2]], &[2])).unwrap();
        assert_eq!(result.value, int(7));
        assert_eq!(result.work.terms, 2);
        assert_eq!(koe58_g(&inst(&[&[1], &[2]], &[1])).unwrap().value, int(3));
        // single station: empty denominator product leaves theta^N
        assert_eq!(koe58_g(&inst(&[&[3]], &[5])).unwrap().value, int(243));
    }

    #[test]
    fn koe58_rejects_bad_inputs() {
        assert_eq!(
            koe58_g(&inst(&[&[1], &[1]], &[2])),
            Err(Error::RepeatedCoefficients)
        );
        assert_eq!(
            koe58_g(&inst(&[&[1, 1], &[2, 3]], &[1, 1])),
            Err(Error::WrongClassCount { d: 2 })
        );
    }

    #[test]
    fn printed_denominator_ordering_flips_sign_for_even_station_counts() {
        // The source formula prints prod_{k!=i}(theta_k - theta_i); each of
        // the n-1 factors is negated relative to the divided-difference
        // ordering, so the printed form equals (-1)^{n-1} G.
        let printed = |instance: &Instance| {
            let n = instance.n();
            let exponent = instance.total_population() + n as u64 - 1;
            let mut total = Rat::zero();
            for i in 0..n {
                let mut denominator = Rat::one();
                for k in 0..n {
                    if k != i {
                        denominator *= instance.theta().entry(k, 0) - instance.theta().entry(i, 0);
                    }
                }
                total += pow(instance.theta().entry(i, 0), exponent) / denominator;
            }
            total
        };
        let two = inst(&[&[1], &[2]], &[2]);
        assert_eq!(printed(&two), -convolution_g(&two).value);
        assert_eq!(printed(&two), int(-7));
        let three = inst(&[&[1], &[2], &[4]], &[1]);
        assert_eq!(printed(&three), convolution_g(&three).value);
        assert_eq!(printed(&three), int(7));
    }

    #[test]
    fn gen_desk_values() {
        assert_eq!(gen_g(&inst(&[&[1], &[1]], &[1])).unwrap().value, int(2));
        assert_eq!(gen_g(&inst(&[&[1], &[1]], &[2])).unwrap().value, int(3));
        assert_eq!(
            gen_g(&inst(&[&[1], &[1], &[2]], &[1])).unwrap().value,
            int(4)
        );
        assert_eq!(
            gen_g(&inst(&[&[1, 1], &[2, 3]], &[1, 1])),
            Err(Error::WrongClassCount { d: 2 })
        );
    }

    #[test]
    fn gen_matches_distinct_formula_exactly() {
        for population in [0i64, 1, 2, 5] {
            let instance = inst(&[&[1], &[2], &[5]], &[population]);
            let from_gen = gen_g(&instance).unwrap();
            let from_koe = koe58_g(&instance).unwrap();
            assert_eq!(from_gen.value, from_koe.value);
            assert_eq!(from_gen.work.terms, 3);
        }
        let fractional = validate(
            vec![vec![ratio(1, 3)], vec![ratio(5, 7)], vec![int(2)]],
            vec![3],
        )
        .unwrap();
        assert_eq!(
            gen_g(&fractional).unwrap().value,
            koe58_g(&fractional).unwrap().value
        );
    }

    #[test]
    fn gen_matches_convolution_on_repeated_inputs() {
        let cases = [
            inst(&[&[1], &[1], &[1]], &[4]),
            inst(&[&[2], &[2], &[3], &[3]], &[3]),
            inst(&[&[1], &[1], &[2], &[5]], &[2]),
            inst(&[&[-1], &[-1], &[2]], &[3]),
        ];
        for instance in &cases {
            assert_eq!(
                gen_g(instance).unwrap().value,
                convolution_g(instance).value
            );
        }
    }

    #[test]
    fn explicit1_desk_values() {
        let result = explicit1_g(&inst(&[&[1], &[2]], &[2])).unwrap();
        assert_eq!(result.value, int(7));
        assert_eq!(result.work.terms, 2 * 3);
        let result = explicit1_g(&inst(&[&[1, 1], &[2, 3]], &[1, 1])).unwrap();
        assert_eq!(result.value, int(19));
        assert_eq!(result.work.terms, 2 * 4);
        // N = 0 short-circuits to 1 even with repeated rows
        let result = explicit1_g(&inst(&[&[1], &[1]], &[0])).unwrap();
        assert_eq!(result.value, int(1));
        assert_eq!(result.work.terms, 2);
    }

    #[test]
    fn explicit1_reports_aggregate_collisions() {
        // rows (1,1) and (2,0) collide at t = (1,1): 1+1 = 2+0
        match explicit1_g(&inst(&[&[1, 1], &[2, 0]], &[1, 1])) {
            Err(Error::DegenerateDenominator { t, i, k }) => {
                assert_eq!(t, vec![1, 1]);
                assert_eq!((i, k), (0, 1));
            }
            other => panic!("expected degenerate denominator, got {other:?}"),
        }
        // repeated rows collide at every t != 0
        assert!(matches!(
            explicit1_g(&inst(&[&[1], &[1]], &[1])),
            Err(Error::DegenerateDenominator { .. })
        ));
    }

    #[test]
    fn explicit_repeated_desk_values() {
        assert_eq!(
            explicit_repeated_g(&inst(&[&[1], &[1]], &[2]))
                .unwrap()
                .value,
            int(3)
        );
        let result = explicit_repeated_g(&inst(&[&[1, 1], &[1, 1], &[2, 3]], &[1, 1])).unwrap();
        assert_eq!(result.value, int(28));
        // groups (2,1): compositions of 1 and 0 over 2 slots = 2 + 1 inner
        // terms, times the 4 box points
        assert_eq!(result.work.terms, 4 * 3);
        assert_eq!(
            result.value,
            convolution_g(&inst(&[&[1, 1], &[1, 1], &[2, 3]], &[1, 1])).value
        );
    }

    #[test]
    fn explicit_repeated_reduces_to_distinct_form() {
        let cases = [
            inst(&[&[1], &[2]], &[2]),
            inst(&[&[1, 1], &[2, 3]], &[1, 1]),
            inst(&[&[1, 2], &[3, 5]], &[2, 1]),
        ];
        for instance in &cases {
            let repeated = explicit_repeated_g(instance).unwrap();
            let distinct = explicit1_g(instance).unwrap();
            assert_eq!(repeated.value, distinct.value);
            assert_eq!(repeated.work.terms, distinct.work.terms);
        }
    }

    #[test]
    fn explicit_repeated_reports_collisions_between_groups() {
        match explicit_repeated_g(&inst(&[&[1, 1], &[2, 0]], &[1, 1])) {
            Err(Error::DegenerateDenominator { t, .. }) => assert_eq!(t, vec![1, 1]),
            other => panic!("expected degenerate denominator, got {other:?}"),
        }
    }

    #[test]
    fn explicit2_desk_values() {
        let result = explicit2_g(&inst(&[&[1], &[2]], &[2]));
        assert_eq!(result.value, int(7));
        assert_eq!(result.work.terms, 6); // C(4, 2)
        assert_eq!(explicit2_g(&inst(&[&[1], &[-1]], &[2])).value, int(1));
        let zero_pop = explicit2_g(&inst(&[&[5, 2], &[3, 3]], &[0, 0]));
        assert_eq!(zero_pop.value, int(1));
        assert_eq!(zero_pop.work.terms, 1);
    }

    #[test]
    fn explicit2_succeeds_where_explicit1_degenerates() {
        let instance = inst(&[&[1, 1], &[2, 0]], &[1, 1]);
        assert!(explicit1_g(&instance).is_err());
        assert_eq!(explicit2_g(&instance).value, convolution_g(&instance).value);
        let repeated = inst(&[&[1], &[1]], &[3]);
        assert_eq!(explicit2_g(&repeated).value, int(4));
    }

    #[test]
    fn explicit2_term_count_closed_form() {
        let instance = inst(&[&[1], &[2], &[3]], &[4]);
        let result = explicit2_g(&instance);
        assert_eq!(BigInt::from(result.work.terms), binomial(4 + 3, 3));
    }
}
