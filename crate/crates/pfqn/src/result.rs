//! Result envelope: which quantity was computed, by which algorithm, and
//! how much work it took.

use std::fmt;

use crate::scalar::Rat;

/// Which of the two equivalent quantities a result carries. G is the
/// normalizing constant; J is the simplex integral.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quantity {
    G,
    J,
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quantity::G => "G",
            Quantity::J => "J",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Convolution,
    Recal,
    Koe58,
    Gen,
    Explicit1,
    ExplicitRepeated,
    Explicit2,
    Taylor,
    BruteForce,
    Monomial,
}

impl Algorithm {
    /// Every algorithm, in the fixed order used for reports.
    pub const ALL: [Algorithm; 10] = [
        Algorithm::Convolution,
        Algorithm::Recal,
        Algorithm::Koe58,
        Algorithm::Gen,
        Algorithm::Explicit1,
        Algorithm::ExplicitRepeated,
        Algorithm::Explicit2,
        Algorithm::Taylor,
        Algorithm::BruteForce,
        Algorithm::Monomial,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Convolution => "convolution",
            Algorithm::Recal => "recal",
            Algorithm::Koe58 => "koe58",
            Algorithm::Gen => "gen",
            Algorithm::Explicit1 => "explicit1",
            Algorithm::ExplicitRepeated => "explicit_repeated",
            Algorithm::Explicit2 => "explicit2",
            Algorithm::Taylor => "taylor",
            Algorithm::BruteForce => "bruteforce",
            Algorithm::Monomial => "monomial",
        }
    }

    pub fn parse(name: &str) -> Option<Algorithm> {
        Algorithm::ALL.into_iter().find(|a| a.name() == name)
    }

    /// The quantity the algorithm natively computes. Everything computes G
    /// except the direct monomial integration, which computes J.
    pub fn native_quantity(&self) -> Quantity {
        match self {
            Algorithm::Monomial => Quantity::J,
            _ => Quantity::G,
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exact work counters: recurrence-table entries filled and explicit-sum
/// terms evaluated. Both are reproducible run to run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct WorkCounters {
    pub table_cells: u64,
    pub terms: u64,
}

impl WorkCounters {
    pub fn cells(table_cells: u64) -> Self {
        WorkCounters {
            table_cells,
            terms: 0,
        }
    }

    pub fn term_count(terms: u64) -> Self {
        WorkCounters {
            table_cells: 0,
            terms,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComputationResult {
    pub quantity: Quantity,
    pub value: Rat,
    pub algorithm: Algorithm,
    pub work: WorkCounters,
}
