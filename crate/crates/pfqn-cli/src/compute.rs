//! The compute subcommand: one instance, one algorithm (forced or
//! cost-selected), exact G and/or J plus advisory decimals.

use pfqn::{
    auto_select, decimal_string, fraction_string, g_to_j, j_to_g, run_algorithm, Algorithm, Error,
    Guards, Quantity, Rat,
};
use serde::Serialize;

use crate::instance_file::{InstanceFile, RequestedQuantity};
use crate::output::{OutputMode, WorkOut, DECIMAL_DIGITS};
use crate::CliError;

#[derive(Serialize)]
struct ComputeOut {
    status: &'static str,
    #[serde(rename = "G", skip_serializing_if = "Option::is_none")]
    g: Option<String>,
    #[serde(rename = "G_decimal", skip_serializing_if = "Option::is_none")]
    g_decimal: Option<String>,
    #[serde(rename = "J", skip_serializing_if = "Option::is_none")]
    j: Option<String>,
    #[serde(rename = "J_decimal", skip_serializing_if = "Option::is_none")]
    j_decimal: Option<String>,
    algorithm: &'static str,
    work: WorkOut,
}

/// Resolve "auto" or a concrete identifier. Unknown names are an input
/// error listing the valid identifiers.
pub fn resolve_algorithm(name: &str, file: &InstanceFile) -> Result<Algorithm, CliError> {
    if name == "auto" {
        return Ok(auto_select(&file.instance));
    }
    Algorithm::parse(name).ok_or_else(|| {
        let known: Vec<&str> = Algorithm::ALL.iter().map(|a| a.name()).collect();
        CliError::Input(format!(
            "unknown algorithm {name:?}; valid: auto, {}",
            known.join(", ")
        ))
    })
}

/// Turn a forced-algorithm precondition failure into an actionable
/// message.
pub fn precondition_message(algorithm: Algorithm, error: &Error) -> String {
    let hint = match error {
        Error::RepeatedCoefficients => "; repeated coefficients are handled by \"gen\"",
        Error::WrongClassCount { .. } => {
            "; the single-class formulas do not apply, use \"convolution\" or \"explicit2\""
        }
        Error::DegenerateDenominator { .. } => {
            "; fall back to \"convolution\" or \"explicit2\", which need no distinctness"
        }
        Error::StateSpaceTooLarge { .. } => "; raise --guard or pick a recurrence algorithm",
        Error::ExpansionTooLarge { .. } => {
            "; raise --expansion-guard or derive J from a G algorithm"
        }
        _ => "",
    };
    format!(
        "{} failed: {}: {error}{hint}",
        algorithm.name(),
        error.kind_name()
    )
}

pub fn run(
    file: &InstanceFile,
    algorithm_name: &str,
    quantity_override: Option<RequestedQuantity>,
    mode: OutputMode,
    guards: &Guards,
) -> Result<String, CliError> {
    let algorithm = resolve_algorithm(algorithm_name, file)?;
    let result = run_algorithm(&file.instance, algorithm, guards)
        .map_err(|error| CliError::Precondition(precondition_message(algorithm, &error)))?;
    let quantity = quantity_override.unwrap_or(file.quantity);

    let (g, j): (Rat, Rat) = match result.quantity {
        Quantity::G => {
            let j = g_to_j(&result.value, &file.instance);
            (result.value, j)
        }
        Quantity::J => {
            let g = j_to_g(&result.value, &file.instance);
            (g, result.value)
        }
    };

    let out = ComputeOut {
        status: "ok",
        g: quantity.wants_g().then(|| fraction_string(&g)),
        g_decimal: quantity
            .wants_g()
            .then(|| decimal_string(&g, DECIMAL_DIGITS)),
        j: quantity.wants_j().then(|| fraction_string(&j)),
        j_decimal: quantity
            .wants_j()
            .then(|| decimal_string(&j, DECIMAL_DIGITS)),
        algorithm: result.algorithm.name(),
        work: result.work.into(),
    };
    Ok(match mode {
        OutputMode::Json => serde_json::to_string(&out).expect("fixed schema serializes"),
        OutputMode::Text => {
            let mut lines = Vec::new();
            if let (Some(g), Some(g_decimal)) = (&out.g, &out.g_decimal) {
                lines.push(format!("G = {g} ({g_decimal})"));
            }
            if let (Some(j), Some(j_decimal)) = (&out.j, &out.j_decimal) {
                lines.push(format!("J = {j} ({j_decimal})"));
            }
            lines.push(format!("algorithm: {}", out.algorithm));
            lines.push(format!(
                "work: table_cells={} terms={}",
                out.work.table_cells, out.work.terms
            ));
            lines.join("\n")
        }
    })
}
