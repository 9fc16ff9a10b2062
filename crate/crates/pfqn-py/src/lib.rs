//! Python bindings for the exact normalizing-constant library.
//!
//! Values stay exact end to end: scalars come in as Python ints, strings
//! ("p/q" or finite decimals), or `fractions.Fraction`; results go out as
//! lowest-terms fraction strings plus arbitrary-precision
//! numerator/denominator pairs that plug straight back into `Fraction`.

use num::bigint::BigInt;
use num::Zero;
use pfqn::{
    auto_select, decimal_string, fraction_string, g_to_j, j_to_g, parse_scalar, run_algorithm,
    state_space_size, validate, Algorithm, Guards, Quantity, Rat,
};
use pyo3::exceptions::{PyTypeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyFloat, PyList};

const DECIMAL_DIGITS: usize = 15;

fn value_error(error: pfqn::Error) -> PyErr {
    PyValueError::new_err(format!("{}: {error}", error.kind_name()))
}

fn algorithm_names() -> String {
    let names: Vec<&str> = Algorithm::ALL.iter().map(|a| a.name()).collect();
    names.join(", ")
}

fn resolve_algorithm(name: &str, instance: &pfqn::Instance) -> PyResult<Algorithm> {
    if name == "auto" {
        return Ok(auto_select(instance));
    }
    Algorithm::parse(name).ok_or_else(|| {
        PyValueError::new_err(format!(
            "unknown algorithm {name:?}; valid: auto, {}",
            algorithm_names()
        ))
    })
}

/// Accepts int, str ("p/q", integer, or finite decimal), or any object
/// with integer numerator/denominator attributes (fractions.Fraction).
/// Floats are refused rather than rounded.
fn scalar_from_py(value: &Bound<'_, PyAny>) -> PyResult<Rat> {
    if value.is_instance_of::<PyFloat>() {
        return Err(PyTypeError::new_err(
            "floats are inexact; pass an int, a \"p/q\" or decimal string, or a Fraction",
        ));
    }
    if let Ok(n) = value.extract::<BigInt>() {
        return Ok(Rat::from_integer(n));
    }
    if let Ok(text) = value.extract::<String>() {
        return parse_scalar(&text).map_err(value_error);
    }
    let parts = (
        value
            .getattr("numerator")
            .and_then(|v| v.extract::<BigInt>()),
        value
            .getattr("denominator")
            .and_then(|v| v.extract::<BigInt>()),
    );
    if let (Ok(numer), Ok(denom)) = parts {
        if denom.is_zero() {
            return Err(PyValueError::new_err("denominator is zero"));
        }
        return Ok(Rat::new(numer, denom));
    }
    Err(PyTypeError::new_err(format!(
        "cannot interpret {} as an exact scalar",
        value.get_type().name()?
    )))
}

/// A demand matrix together with a population vector.
#[pyclass(module = "pfqn_py")]
struct Instance {
    inner: pfqn::Instance,
}

#[pymethods]
impl Instance {
    #[new]
    fn new(theta: Vec<Vec<Bound<'_, PyAny>>>, population: Vec<i64>) -> PyResult<Self> {
        let mut rows = Vec::with_capacity(theta.len());
        for row in &theta {
            rows.push(
                row.iter()
                    .map(scalar_from_py)
                    .collect::<PyResult<Vec<Rat>>>()?,
            );
        }
        let inner = validate(rows, population).map_err(value_error)?;
        Ok(Instance { inner })
    }

    /// Number of matrix rows (queueing stations / linear forms).
    #[getter]
    fn stations(&self) -> usize {
        self.inner.n()
    }

    /// Number of job classes (matrix columns / population entries).
    #[getter]
    fn classes(&self) -> usize {
        self.inner.d()
    }

    #[getter]
    fn population(&self) -> Vec<u64> {
        self.inner.population().counts().to_vec()
    }

    /// Matrix entries as lowest-terms fraction strings.
    #[getter]
    fn theta(&self) -> Vec<Vec<String>> {
        self.inner
            .theta()
            .rows()
            .map(|row| row.iter().map(fraction_string).collect())
            .collect()
    }

    /// Number of ways to place the population on the stations; the size
    /// of the state space the brute-force oracle enumerates.
    fn state_space_size(&self) -> BigInt {
        state_space_size(&self.inner)
    }

    /// The exact factor (prod_j N_j!) / (N + n - 1)! taking G to J, as a
    /// (numerator, denominator) pair.
    fn conversion_factor(&self) -> (BigInt, BigInt) {
        let factor = pfqn::conversion_factor(&self.inner);
        (factor.numer().clone(), factor.denom().clone())
    }

    fn __repr__(&self) -> String {
        format!(
            "Instance(stations={}, classes={}, population={:?})",
            self.inner.n(),
            self.inner.d(),
            self.inner.population().counts()
        )
    }
}

/// One exact value plus how it was obtained.
#[pyclass(module = "pfqn_py", name = "Result")]
struct ComputedValue {
    /// "G" or "J".
    #[pyo3(get)]
    quantity: &'static str,
    /// Lowest-terms fraction string, e.g. "7/3".
    #[pyo3(get)]
    value: String,
    /// 15-significant-digit decimal rendering (advisory only).
    #[pyo3(get)]
    decimal: String,
    #[pyo3(get)]
    numerator: BigInt,
    #[pyo3(get)]
    denominator: BigInt,
    #[pyo3(get)]
    algorithm: &'static str,
    #[pyo3(get)]
    table_cells: u64,
    #[pyo3(get)]
    terms: u64,
}

#[pymethods]
impl ComputedValue {
    fn __repr__(&self) -> String {
        format!(
            "Result({} = {}, algorithm={}, table_cells={}, terms={})",
            self.quantity, self.value, self.algorithm, self.table_cells, self.terms
        )
    }
}

fn computed(quantity: &'static str, value: Rat, result: &pfqn::ComputationResult) -> ComputedValue {
    ComputedValue {
        quantity,
        value: fraction_string(&value),
        decimal: decimal_string(&value, DECIMAL_DIGITS),
        numerator: value.numer().clone(),
        denominator: value.denom().clone(),
        algorithm: result.algorithm.name(),
        table_cells: result.work.table_cells,
        terms: result.work.terms,
    }
}

fn run(
    instance: &Instance,
    algorithm: &str,
    guard: u64,
    expansion_guard: u64,
    want: Quantity,
) -> PyResult<ComputedValue> {
    let algorithm = resolve_algorithm(algorithm, &instance.inner)?;
    let guards = Guards {
        state_space: guard,
        expansion: expansion_guard,
    };
    let result = run_algorithm(&instance.inner, algorithm, &guards).map_err(value_error)?;
    let value = match (result.quantity, want) {
        (Quantity::G, Quantity::J) => g_to_j(&result.value, &instance.inner),
        (Quantity::J, Quantity::G) => j_to_g(&result.value, &instance.inner),
        _ => result.value.clone(),
    };
    let label = match want {
        Quantity::G => "G",
        Quantity::J => "J",
    };
    Ok(computed(label, value, &result))
}

/// Compute the normalizing constant G exactly.
#[pyfunction]
#[pyo3(signature = (instance, algorithm = "auto", guard = 10_000_000, expansion_guard = 1_000_000))]
fn compute_g(
    instance: &Instance,
    algorithm: &str,
    guard: u64,
    expansion_guard: u64,
) -> PyResult<ComputedValue> {
    run(instance, algorithm, guard, expansion_guard, Quantity::G)
}

/// Compute the simplex integral J exactly.
#[pyfunction]
#[pyo3(signature = (instance, algorithm = "auto", guard = 10_000_000, expansion_guard = 1_000_000))]
fn compute_j(
    instance: &Instance,
    algorithm: &str,
    guard: u64,
    expansion_guard: u64,
) -> PyResult<ComputedValue> {
    run(instance, algorithm, guard, expansion_guard, Quantity::J)
}

/// Convert a value of G to the integral J for the same instance.
#[pyfunction]
fn convert_g_to_j(value: &Bound<'_, PyAny>, instance: &Instance) -> PyResult<String> {
    Ok(fraction_string(&g_to_j(
        &scalar_from_py(value)?,
        &instance.inner,
    )))
}

/// Convert a value of J back to the normalizing constant G.
#[pyfunction]
fn convert_j_to_g(value: &Bound<'_, PyAny>, instance: &Instance) -> PyResult<String> {
    Ok(fraction_string(&j_to_g(
        &scalar_from_py(value)?,
        &instance.inner,
    )))
}

/// The algorithm identifiers accepted by compute_g/compute_j.
#[pyfunction]
fn algorithms() -> Vec<&'static str> {
    Algorithm::ALL.iter().map(|a| a.name()).collect()
}

/// Run every algorithm and compare values exactly. Returns a dict with
/// "agreement", "reference_algorithm", "reference_G", and per-algorithm
/// "results" (each either a value with work counters or a skip reason).
#[pyfunction]
#[pyo3(signature = (instance, guard = 10_000_000, expansion_guard = 1_000_000))]
fn check<'py>(
    py: Python<'py>,
    instance: &Instance,
    guard: u64,
    expansion_guard: u64,
) -> PyResult<Bound<'py, PyDict>> {
    let guards = Guards {
        state_space: guard,
        expansion: expansion_guard,
    };
    let outcomes: Vec<(Algorithm, Result<pfqn::ComputationResult, pfqn::Error>)> = Algorithm::ALL
        .into_iter()
        .map(|algorithm| {
            (
                algorithm,
                run_algorithm(&instance.inner, algorithm, &guards),
            )
        })
        .collect();

    let reference = outcomes
        .iter()
        .find(|(a, r)| *a == Algorithm::BruteForce && r.is_ok())
        .or_else(|| {
            outcomes
                .iter()
                .find(|(a, r)| *a == Algorithm::Convolution && r.is_ok())
        })
        .expect("convolution always produces a value");
    let reference_algorithm = reference.0.name();
    let reference_g = match &reference.1 {
        Ok(result) => match result.quantity {
            Quantity::G => result.value.clone(),
            Quantity::J => j_to_g(&result.value, &instance.inner),
        },
        Err(_) => unreachable!(),
    };

    let mut agreement = true;
    let results = PyList::empty(py);
    for (algorithm, outcome) in &outcomes {
        let entry = PyDict::new(py);
        entry.set_item("algorithm", algorithm.name())?;
        match outcome {
            Ok(result) => {
                let g_equivalent = match result.quantity {
                    Quantity::G => result.value.clone(),
                    Quantity::J => j_to_g(&result.value, &instance.inner),
                };
                if g_equivalent != reference_g {
                    agreement = false;
                }
                entry.set_item("quantity", result.quantity.to_string())?;
                entry.set_item("value", fraction_string(&result.value))?;
                entry.set_item("table_cells", result.work.table_cells)?;
                entry.set_item("terms", result.work.terms)?;
            }
            Err(error) => entry.set_item("skipped", error.kind_name())?,
        }
        results.append(entry)?;
    }

    let report = PyDict::new(py);
    report.set_item("agreement", agreement)?;
    report.set_item("reference_algorithm", reference_algorithm)?;
    report.set_item("reference_G", fraction_string(&reference_g))?;
    report.set_item("results", results)?;
    Ok(report)
}

#[pymodule]
fn pfqn_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Instance>()?;
    m.add_class::<ComputedValue>()?;
    m.add_function(wrap_pyfunction!(compute_g, m)?)?;
    m.add_function(wrap_pyfunction!(compute_j, m)?)?;
    m.add_function(wrap_pyfunction!(convert_g_to_j, m)?)?;
    m.add_function(wrap_pyfunction!(convert_j_to_g, m)?)?;
    m.add_function(wrap_pyfunction!(algorithms, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    Ok(())
}
