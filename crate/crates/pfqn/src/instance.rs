//! A validated (theta, population) pair, the unit every algorithm consumes.

use crate::error::Error;
use crate::population::Population;
use crate::scalar::Rat;
use crate::theta::ThetaMatrix;

/// Immutable, validated input: the coefficient matrix and the per-class
/// degrees, with matching class counts and at least one row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    theta: ThetaMatrix,
    population: Population,
}

impl Instance {
    /// Bind an already-constructed matrix and population, enforcing the
    /// shared class count and n >= 1.
    pub fn new(theta: ThetaMatrix, population: Population) -> Result<Self, Error> {
        if theta.is_empty() {
            return Err(Error::EmptyMatrix);
        }
        if theta.d() != population.d() {
            return Err(Error::DimensionMismatch {
                expected: theta.d(),
                got: population.d(),
            });
        }
        Ok(Instance { theta, population })
    }

    pub fn theta(&self) -> &ThetaMatrix {
        &self.theta
    }

    pub fn population(&self) -> &Population {
        &self.population
    }

    pub fn n(&self) -> usize {
        self.theta.n()
    }

    pub fn d(&self) -> usize {
        self.theta.d()
    }

    /// Total degree N.
    pub fn total_population(&self) -> u64 {
        self.population.total()
    }
}

/// Validate raw input into an [`Instance`]: the grid must be rectangular
/// with at least one row and one column, its column count must match the
/// population length, and every population entry must be nonnegative.
pub fn validate(raw_theta: Vec<Vec<Rat>>, raw_population: Vec<i64>) -> Result<Instance, Error> {
    if raw_population.is_empty() {
        return Err(Error::EmptyClasses);
    }
    let theta = ThetaMatrix::new(raw_theta)?;
    if theta.d() != raw_population.len() {
        return Err(Error::DimensionMismatch {
            expected: theta.d(),
            got: raw_population.len(),
        });
    }
    let mut counts = Vec::with_capacity(raw_population.len());
    for (class, &value) in raw_population.iter().enumerate() {
        if value < 0 {
            return Err(Error::NegativePopulation { class, value });
        }
        counts.push(value as u64);
    }
    Instance::new(theta, Population::new(counts))
}
