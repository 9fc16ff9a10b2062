//! The check subcommand: run every applicable algorithm on one instance
//! and demand exact agreement.
//!
//! The reference value is the brute-force enumeration when the state space
//! fits under the guard, otherwise the convolution recurrence. Algorithms
//! whose preconditions fail (wrong class count, repeated coefficients,
//! degenerate denominators, blown guards) are reported as skipped with the
//! reason; agreement is judged over the rest.

use pfqn::{
    decimal_string, fraction_string, j_to_g, run_algorithm, Algorithm, Guards, Quantity, Rat,
};
use serde::Serialize;

use crate::instance_file::InstanceFile;
use crate::output::{OutputMode, WorkOut, DECIMAL_DIGITS};
use crate::CliError;

#[derive(Serialize)]
struct CheckEntry {
    algorithm: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    quantity: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    work: Option<WorkOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    skipped: Option<String>,
}

#[derive(Serialize)]
struct CheckOut {
    status: &'static str,
    reference_algorithm: &'static str,
    #[serde(rename = "reference_G")]
    reference_g: String,
    #[serde(rename = "reference_G_decimal")]
    reference_g_decimal: String,
    agreement: bool,
    results: Vec<CheckEntry>,
}

struct Outcome {
    algorithm: Algorithm,
    outcome: Result<(Rat, Quantity, WorkOut, Rat), String>, // value, kind, work, G-equivalent
}

pub fn run(
    file: &InstanceFile,
    mode: OutputMode,
    guards: &Guards,
) -> Result<(String, bool), CliError> {
    let instance = &file.instance;
    let mut outcomes: Vec<Outcome> = Vec::with_capacity(Algorithm::ALL.len());
    for algorithm in Algorithm::ALL {
        let outcome = match run_algorithm(instance, algorithm, guards) {
            Ok(result) => {
                let g_equivalent = match result.quantity {
                    Quantity::G => result.value.clone(),
                    Quantity::J => j_to_g(&result.value, instance),
                };
                Ok((
                    result.value,
                    result.quantity,
                    result.work.into(),
                    g_equivalent,
                ))
            }
            Err(error) => Err(error.kind_name().to_string()),
        };
        outcomes.push(Outcome { algorithm, outcome });
    }

    let reference = outcomes
        .iter()
        .find(|o| o.algorithm == Algorithm::BruteForce && o.outcome.is_ok())
        .or_else(|| {
            outcomes
                .iter()
                .find(|o| o.algorithm == Algorithm::Convolution && o.outcome.is_ok())
        })
        .expect("convolution always produces a value");
    let reference_algorithm = reference.algorithm.name();
    let reference_g = match &reference.outcome {
        Ok((_, _, _, g)) => g.clone(),
        Err(_) => unreachable!(),
    };

    let mut agreement = true;
    let mut results = Vec::with_capacity(outcomes.len());
    for outcome in &outcomes {
        match &outcome.outcome {
            Ok((value, quantity, work, g_equivalent)) => {
                if *g_equivalent != reference_g {
                    agreement = false;
                }
                results.push(CheckEntry {
                    algorithm: outcome.algorithm.name(),
                    quantity: Some(match quantity {
                        Quantity::G => "G",
                        Quantity::J => "J",
                    }),
                    value: Some(fraction_string(value)),
                    work: Some(WorkOut {
                        table_cells: work.table_cells,
                        terms: work.terms,
                    }),
                    skipped: None,
                });
            }
            Err(reason) => results.push(CheckEntry {
                algorithm: outcome.algorithm.name(),
                quantity: None,
                value: None,
                work: None,
                skipped: Some(reason.clone()),
            }),
        }
    }

    let out = CheckOut {
        status: if agreement { "ok" } else { "disagreement" },
        reference_algorithm,
        reference_g_decimal: decimal_string(&reference_g, DECIMAL_DIGITS),
        reference_g: fraction_string(&reference_g),
        agreement,
        results,
    };

    let rendered = match mode {
        OutputMode::Json => serde_json::to_string(&out).expect("fixed schema serializes"),
        OutputMode::Text => {
            let mut lines = vec![format!(
                "reference ({}): G = {} ({})",
                out.reference_algorithm, out.reference_g, out.reference_g_decimal
            )];
            for entry in &out.results {
                match (&entry.value, &entry.skipped) {
                    (Some(value), _) => {
                        let work = entry.work.as_ref().expect("values carry work counters");
                        lines.push(format!(
                            "{:<18} {} = {} [table_cells={} terms={}]",
                            entry.algorithm,
                            entry.quantity.unwrap_or("G"),
                            value,
                            work.table_cells,
                            work.terms
                        ));
                    }
                    (None, Some(reason)) => {
                        lines.push(format!("{:<18} skipped: {reason}", entry.algorithm));
                    }
                    (None, None) => unreachable!(),
                }
            }
            lines.push(format!(
                "agreement: {}",
                if out.agreement { "yes" } else { "NO" }
            ));
            lines.join("\n")
        }
    };
    Ok((rendered, agreement))
}
