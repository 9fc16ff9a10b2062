//! Error type shared by every module of the crate.

use std::fmt;

use num::BigInt;

/// Errors reported by validation, parsing, and the algorithms' precondition
/// checks. Algorithms never return approximate values on failure; any
/// violated precondition surfaces as one of these variants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A row or vector has the wrong number of entries.
    DimensionMismatch { expected: usize, got: usize },
    /// A population count is negative.
    NegativePopulation { class: usize, value: i64 },
    /// The instance has no classes (d = 0).
    EmptyClasses,
    /// The coefficient matrix has no rows (n = 0).
    EmptyMatrix,
    /// Row index outside the matrix.
    IndexOutOfRange { index: usize, len: usize },
    /// The divided-difference form requires pairwise distinct coefficients.
    RepeatedCoefficients,
    /// The algorithm only handles single-class instances (d = 1).
    WrongClassCount { d: usize },
    /// An aggregate denominator vanished at multi-index `t` for rows/groups
    /// `i` and `k`; the caller should fall back to a recurrence algorithm.
    DegenerateDenominator { t: Vec<u64>, i: usize, k: usize },
    /// The enumeration oracle would visit more states than the guard allows.
    StateSpaceTooLarge { size: BigInt, cap: u64 },
    /// The monomial expansion would exceed the guard.
    ExpansionTooLarge { size: BigInt, cap: u64 },
    /// G = 0, so state probabilities are undefined.
    ZeroNormalizingConstant,
    /// Exact division by zero.
    DivisionByZero,
    /// A scalar literal could not be parsed exactly.
    MalformedScalar {
        literal: String,
        reason: &'static str,
    },
}

impl Error {
    /// Compact variant name, for reports that tag outcomes by error kind.
    pub fn kind_name(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::NegativePopulation { .. } => "NegativePopulation",
            Error::EmptyClasses => "EmptyClasses",
            Error::EmptyMatrix => "EmptyMatrix",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::RepeatedCoefficients => "RepeatedCoefficients",
            Error::WrongClassCount { .. } => "WrongClassCount",
            Error::DegenerateDenominator { .. } => "DegenerateDenominator",
            Error::StateSpaceTooLarge { .. } => "StateSpaceTooLarge",
            Error::ExpansionTooLarge { .. } => "ExpansionTooLarge",
            Error::ZeroNormalizingConstant => "ZeroNormalizingConstant",
            Error::DivisionByZero => "DivisionByZero",
            Error::MalformedScalar { .. } => "MalformedScalar",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, got } => {
                write!(
                    f,
                    "dimension mismatch: expected {expected} entries, got {got}"
                )
            }
            Error::NegativePopulation { class, value } => {
                write!(f, "population of class {class} is negative ({value})")
            }
            Error::EmptyClasses => write!(f, "instance has no classes (d = 0)"),
            Error::EmptyMatrix => write!(f, "coefficient matrix has no rows (n = 0)"),
            Error::IndexOutOfRange { index, len } => {
                write!(f, "row index {index} out of range for {len} rows")
            }
            Error::RepeatedCoefficients => {
                write!(f, "coefficients are not pairwise distinct")
            }
            Error::WrongClassCount { d } => {
                write!(
                    f,
                    "algorithm requires a single class (d = 1), instance has d = {d}"
                )
            }
            Error::DegenerateDenominator { t, i, k } => {
                write!(
                    f,
                    "aggregate denominator vanished at t = {t:?} between rows {i} and {k}"
                )
            }
            Error::StateSpaceTooLarge { size, cap } => {
                write!(f, "state space has {size} states, above the guard of {cap}")
            }
            Error::ExpansionTooLarge { size, cap } => {
                write!(
                    f,
                    "monomial expansion has {size} terms, above the guard of {cap}"
                )
            }
            Error::ZeroNormalizingConstant => {
                write!(
                    f,
                    "normalizing constant is zero; state probabilities are undefined"
                )
            }
            Error::DivisionByZero => write!(f, "exact division by zero"),
            Error::MalformedScalar { literal, reason } => {
                write!(f, "malformed scalar literal {literal:?}: {reason}")
            }
        }
    }
}

impl std::error::Error for Error {}
