//! The two table-driven algorithms for G: station-by-station convolution
//! over the full population box, and the class-recursive scheme that grows
//! the matrix by repeating rows while the population shrinks.

use std::collections::HashMap;

use num::{One, Zero};

use crate::instance::Instance;
use crate::lattice::BoxLattice;
use crate::result::{Algorithm, ComputationResult, Quantity, WorkCounters};
use crate::scalar::Rat;

/// Dense table of G values: layer i holds G restricted to the first i
/// matrix rows, for every population point in the box 0 <= m <= N.
pub struct ConvolutionTable {
    lattice: BoxLattice,
    layers: Vec<Vec<Rat>>,
}

impl ConvolutionTable {
    /// Fills all n + 1 layers. Layer 0 is the empty matrix: 1 at m = 0 and
    /// 0 elsewhere. Each later layer adds one station:
    /// G_i(m) = G_{i-1}(m) + sum_j theta_ij G_i(m - 1_j),
    /// swept in increasing linear order so decremented points are ready.
    pub fn fill(instance: &Instance) -> Self {
        let lattice = BoxLattice::new(instance.population().counts());
        let size = lattice.size();
        let mut layers = Vec::with_capacity(instance.n() + 1);
        let mut base = vec![Rat::zero(); size];
        base[0] = Rat::one();
        layers.push(base);
        for station in 0..instance.n() {
            let mut layer = layers[station].clone();
            for (index, m) in lattice.iter().enumerate() {
                for class in 0..instance.d() {
                    if let Some(below) = lattice.decrement(index, &m, class) {
                        let term = instance.theta().entry(station, class) * &layer[below];
                        layer[index] += term;
                    }
                }
            }
            layers.push(layer);
        }
        ConvolutionTable { lattice, layers }
    }

    /// G using the first `stations` rows at population point `m`.
    pub fn cell(&self, stations: usize, m: &[u64]) -> &Rat {
        &self.layers[stations][self.lattice.index_of(m)]
    }

    pub fn table_cells(&self) -> u64 {
        (self.layers.len() as u64) * (self.lattice.size() as u64)
    }
}

/// G by convolution; exact for every matrix, no distinctness requirements.
pub fn convolution_g(instance: &Instance) -> ComputationResult {
    let table = ConvolutionTable::fill(instance);
    let value = table
        .cell(instance.n(), instance.population().counts())
        .clone();
    ComputationResult {
        quantity: Quantity::G,
        value,
        algorithm: Algorithm::Convolution,
        work: WorkCounters::cells(table.table_cells()),
    }
}

/// Matrix rows folded into distinct rows with multiplicities, preserving
/// first-occurrence order. Two rows fold only when equal entry for entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowMultiplicity {
    base: Vec<Vec<Rat>>,
    mult: Vec<u64>,
}

impl RowMultiplicity {
    pub fn from_theta(instance: &Instance) -> Self {
        let mut base: Vec<Vec<Rat>> = Vec::new();
        let mut mult: Vec<u64> = Vec::new();
        for row in instance.theta().rows() {
            match base.iter().position(|seen| seen.as_slice() == row) {
                Some(found) => mult[found] += 1,
                None => {
                    base.push(row.to_vec());
                    mult.push(1);
                }
            }
        }
        RowMultiplicity { base, mult }
    }

    /// Number of distinct rows.
    pub fn distinct(&self) -> usize {
        self.base.len()
    }

    pub fn base(&self) -> &[Vec<Rat>] {
        &self.base
    }

    pub fn multiplicities(&self) -> &[u64] {
        &self.mult
    }
}

/// G by the row-repetition recursion. One population unit of the highest
/// class still present is removed per step while a matrix row is repeated:
/// G(theta, N) = (1/N_j) sum_i m_i theta_ij G(theta with row i repeated,
/// N - 1_j). Repeated matrices never materialize; only the multiplicity
/// vector moves. Work counts distinct memoized subproblems, which depends
/// on the distinct-row count rather than on n.
pub fn recal_g(instance: &Instance) -> ComputationResult {
    let rows = RowMultiplicity::from_theta(instance);
    let mut memo: HashMap<(Vec<u64>, Vec<u64>), Rat> = HashMap::new();
    let value = recal_value(
        &rows,
        &rows.mult.clone(),
        instance.population().counts(),
        &mut memo,
    );
    ComputationResult {
        quantity: Quantity::G,
        value,
        algorithm: Algorithm::Recal,
        work: WorkCounters::term_count(memo.len() as u64),
    }
}

fn recal_value(
    rows: &RowMultiplicity,
    mult: &[u64],
    population: &[u64],
    memo: &mut HashMap<(Vec<u64>, Vec<u64>), Rat>,
) -> Rat {
    let key = (mult.to_vec(), population.to_vec());
    if let Some(found) = memo.get(&key) {
        return found.clone();
    }
    let value = match population.iter().rposition(|&count| count > 0) {
        None => Rat::one(),
        Some(class) => {
            let mut shrunk = population.to_vec();
            shrunk[class] -= 1;
            let mut sum = Rat::zero();
            for (i, row) in rows.base.iter().enumerate() {
                let mut grown = mult.to_vec();
                grown[i] += 1;
                let child = recal_value(rows, &grown, &shrunk, memo);
                sum += Rat::from_integer(mult[i].into()) * &row[class] * child;
            }
            sum / Rat::from_integer(population[class].into())
        }
    };
    memo.insert(key, value.clone());
    value
}
