//! Ground-truth computations, each independent of the recurrence and
//! explicit-formula paths:
//!
//! * state-space enumeration and the brute-force sum of product-form
//!   weights (the primary oracle),
//! * Taylor-coefficient extraction from the generating function
//!   1 / prod_i (1 - sum_j z_j theta_ij) by truncated series products,
//! * direct monomial integration of J over the simplex,
//! * per-state stationary probabilities.

use std::collections::BTreeMap;

use num::{BigInt, One, Zero};

use crate::combinatorics::{binomial, compositions, Factorials};
use crate::error::Error;
use crate::instance::Instance;
use crate::result::{Algorithm, ComputationResult, Quantity, WorkCounters};
use crate::scalar::{pow, Rat};

/// Size caps for the enumeration and expansion oracles. Defaults keep
/// every cross-check interactive; raise them explicitly for bigger runs.
#[derive(Clone, Copy, Debug)]
pub struct Guards {
    /// Maximum number of network states bruteforce_g may visit.
    pub state_space: u64,
    /// Maximum number of monomials the integrand expansion may hold.
    pub expansion: u64,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            state_space: 10_000_000,
            expansion: 1_000_000,
        }
    }
}

impl Guards {
    pub fn with_state_space(cap: u64) -> Self {
        Guards {
            state_space: cap,
            ..Guards::default()
        }
    }
}

/// One network state: k[i][j] class-j jobs at station i, with every class
/// column summing to its population.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NetworkState {
    counts: Vec<Vec<u64>>,
}

impl NetworkState {
    pub fn counts(&self) -> &[Vec<u64>] {
        &self.counts
    }

    /// k_i = sum_j k_ij.
    pub fn row_total(&self, station: usize) -> u64 {
        self.counts[station].iter().sum()
    }
}

/// Number of states: prod_j C(N_j + n - 1, n - 1).
pub fn state_space_size(instance: &Instance) -> BigInt {
    let n = instance.n() as u64;
    instance
        .population()
        .counts()
        .iter()
        .map(|&count| binomial(count + n - 1, n - 1))
        .product()
}

/// All states with the class-j column summing to N_j, each exactly once,
/// in a fixed deterministic order.
pub fn enumerate_states(instance: &Instance) -> StateIter {
    let n = instance.n();
    let per_class: Vec<Vec<Vec<u64>>> = instance
        .population()
        .counts()
        .iter()
        .map(|&count| compositions(count, n))
        .collect();
    StateIter {
        cursor: vec![0; per_class.len()],
        per_class,
        done: false,
    }
}

pub struct StateIter {
    per_class: Vec<Vec<Vec<u64>>>,
    cursor: Vec<usize>,
    done: bool,
}

impl Iterator for StateIter {
    type Item = NetworkState;

    fn next(&mut self) -> Option<NetworkState> {
        if self.done {
            return None;
        }
        let n = self.per_class.first().map_or(0, |c| c[0].len());
        let mut counts = vec![Vec::with_capacity(self.per_class.len()); n];
        for (class, &pick) in self.cursor.iter().enumerate() {
            let split = &self.per_class[class][pick];
            for station in 0..n {
                counts[station].push(split[station]);
            }
        }
        // odometer over the per-class composition lists
        let mut advanced = false;
        for class in 0..self.cursor.len() {
            if self.cursor[class] + 1 < self.per_class[class].len() {
                self.cursor[class] += 1;
                advanced = true;
                break;
            }
            self.cursor[class] = 0;
        }
        if !advanced {
            self.done = true;
        }
        Some(NetworkState { counts })
    }
}

fn weight_with(instance: &Instance, state: &NetworkState, factorials: &Factorials) -> Rat {
    let mut value = Rat::one();
    for (station, per_class) in state.counts().iter().enumerate() {
        let row_total: u64 = per_class.iter().sum();
        value *= Rat::from_integer(factorials.multinomial(row_total, per_class));
        for (class, &count) in per_class.iter().enumerate() {
            if count > 0 {
                value *= pow(instance.theta().entry(station, class), count);
            }
        }
    }
    value
}

/// Product-form weight of one state:
/// prod_i (k_i! / prod_j k_ij!) * prod_j theta_ij^k_ij.
pub fn state_weight(instance: &Instance, state: &NetworkState) -> Rat {
    let factorials = Factorials::up_to(instance.total_population());
    weight_with(instance, state, &factorials)
}

/// G by full enumeration of the state space; the primary oracle.
pub fn bruteforce_g(instance: &Instance, guards: &Guards) -> Result<ComputationResult, Error> {
    let size = state_space_size(instance);
    if size > BigInt::from(guards.state_space) {
        return Err(Error::StateSpaceTooLarge {
            size,
            cap: guards.state_space,
        });
    }
    let factorials = Factorials::up_to(instance.total_population());
    let mut total = Rat::zero();
    let mut states = 0u64;
    for state in enumerate_states(instance) {
        total += weight_with(instance, &state, &factorials);
        states += 1;
    }
    Ok(ComputationResult {
        quantity: Quantity::G,
        value: total,
        algorithm: Algorithm::BruteForce,
        work: WorkCounters::term_count(states),
    })
}

/// Stationary probability of one state, weight / G. Mixed-sign theta can
/// make G zero, in which case the probabilistic reading is void.
pub fn state_probability(
    instance: &Instance,
    state: &NetworkState,
    guards: &Guards,
) -> Result<Rat, Error> {
    let g = bruteforce_g(instance, guards)?.value;
    if g.is_zero() {
        return Err(Error::ZeroNormalizingConstant);
    }
    Ok(state_weight(instance, state) / g)
}

/// Multivariate polynomial truncated to the box 0 <= m <= bounds, keyed by
/// class multi-index; absent keys are zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    bounds: Vec<u64>,
    coeffs: BTreeMap<Vec<u64>, Rat>,
}

impl TruncatedSeries {
    pub fn one(bounds: Vec<u64>) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(vec![0; bounds.len()], Rat::one());
        TruncatedSeries { bounds, coeffs }
    }

    pub fn zero(bounds: Vec<u64>) -> Self {
        TruncatedSeries {
            bounds,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn coeff(&self, index: &[u64]) -> Rat {
        self.coeffs.get(index).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn set(&mut self, index: Vec<u64>, value: Rat) {
        if value.is_zero() {
            self.coeffs.remove(&index);
        } else {
            self.coeffs.insert(index, value);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_assign(&mut self, other: &TruncatedSeries) {
        for (index, value) in &other.coeffs {
            let updated = self.coeff(index) + value;
            self.set(index.clone(), updated);
        }
    }

    /// Product truncated to the shared box; `products` counts the
    /// coefficient pairs that landed inside it.
    fn mul(&self, other: &TruncatedSeries, products: &mut u64) -> TruncatedSeries {
        let mut result = TruncatedSeries::zero(self.bounds.clone());
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                let sum: Vec<u64> = a.iter().zip(b).map(|(&x, &y)| x + y).collect();
                if sum.iter().zip(&self.bounds).any(|(&m, &bound)| m > bound) {
                    continue;
                }
                *products += 1;
                let updated = result.coeff(&sum) + ca * cb;
                result.set(sum, updated);
            }
        }
        result
    }
}

/// Coefficient of z^N in prod_i 1/(1 - sum_j z_j theta_ij), computed by
/// multiplying geometric series truncated to the box 0 <= m <= bounds, one
/// matrix row at a time. `bounds` must dominate the population
/// componentwise but is otherwise free: any admissible box yields the same
/// coefficient, which is what makes the truncation sound. Also returns the
/// number of coefficient products performed.
pub fn taylor_coefficient(instance: &Instance, bounds: &[u64]) -> (Rat, u64) {
    let mut products = 0u64;
    let total: u64 = bounds.iter().sum();
    let mut accumulated = TruncatedSeries::one(bounds.to_vec());
    for station in 0..instance.n() {
        // linear form of this row as a series
        let mut form = TruncatedSeries::zero(bounds.to_vec());
        for class in 0..instance.d() {
            if bounds[class] == 0 {
                continue;
            }
            let mut index = vec![0u64; instance.d()];
            index[class] = 1;
            form.set(index, instance.theta().entry(station, class).clone());
        }
        // geometric series 1 + form + form^2 + ... within the box
        let mut geometric = TruncatedSeries::one(bounds.to_vec());
        let mut power = TruncatedSeries::one(bounds.to_vec());
        for _ in 1..=total {
            power = power.mul(&form, &mut products);
            if power.is_zero() {
                break;
            }
            geometric.add_assign(&power);
        }
        accumulated = accumulated.mul(&geometric, &mut products);
    }
    (accumulated.coeff(instance.population().counts()), products)
}

/// G as the Taylor coefficient of z^N in the generating function; the
/// second independent oracle.
pub fn taylor_g(instance: &Instance) -> ComputationResult {
    let (value, products) = taylor_coefficient(instance, instance.population().counts());
    ComputationResult {
        quantity: Quantity::G,
        value,
        algorithm: Algorithm::Taylor,
        work: WorkCounters::term_count(products),
    }
}

/// J by direct integration: expand prod_j (sum_i theta_ij x_i)^N_j into
/// monomials and integrate each with
/// int_simplex x^a dm = (prod_i a_i!) / (sum_i a_i + n - 1)!.
pub fn monomial_integrate_j(
    instance: &Instance,
    guards: &Guards,
) -> Result<ComputationResult, Error> {
    let n = instance.n() as u64;
    let total = instance.total_population();
    let predicted = binomial(total + n - 1, n - 1);
    if predicted > BigInt::from(guards.expansion) {
        return Err(Error::ExpansionTooLarge {
            size: predicted,
            cap: guards.expansion,
        });
    }
    // expand the integrand over station exponent vectors
    let mut poly: BTreeMap<Vec<u64>, Rat> = BTreeMap::new();
    poly.insert(vec![0; instance.n()], Rat::one());
    for class in 0..instance.d() {
        for _ in 0..instance.population().get(class) {
            let mut next: BTreeMap<Vec<u64>, Rat> = BTreeMap::new();
            for (exponents, coeff) in &poly {
                for station in 0..instance.n() {
                    let theta = instance.theta().entry(station, class);
                    if theta.is_zero() {
                        continue;
                    }
                    let mut bumped = exponents.clone();
                    bumped[station] += 1;
                    let term = coeff * theta;
                    match next.get_mut(&bumped) {
                        Some(existing) => *existing += term,
                        None => {
                            next.insert(bumped, term);
                        }
                    }
                }
            }
            poly = next;
        }
    }
    let factorials = Factorials::up_to(total + n - 1);
    let denominator = factorials.factorial(total + n - 1).clone();
    let mut integral = Rat::zero();
    let mut terms = 0u64;
    for (exponents, coeff) in &poly {
        let mut numer = BigInt::one();
        for &a in exponents {
            numer *= factorials.factorial(a);
        }
        integral += coeff * Rat::new(numer, denominator.clone());
        terms += 1;
    }
    Ok(ComputationResult {
        quantity: Quantity::J,
        value: integral,
        algorithm: Algorithm::Monomial,
        work: WorkCounters::term_count(terms),
    })
}
