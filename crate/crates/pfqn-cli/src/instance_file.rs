//! Instance files: UTF-8 JSON with exact scalar literals.
//!
//! Schema: {"theta": [[scalar, ...], ...], "population": [int, ...],
//! "quantity"?: "G" | "J" | "both"}. A scalar is a JSON integer or a
//! string holding an integer, a fraction "p/q", or a finite decimal; all
//! parse exactly. Non-integer JSON numbers are rejected outright rather
//! than rounded — exact decimals belong in strings.

use std::fmt;
use std::fs;
use std::path::Path;

use pfqn::{parse_scalar, validate, Instance, Rat};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RequestedQuantity {
    G,
    J,
    Both,
}

impl RequestedQuantity {
    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "G" => Some(RequestedQuantity::G),
            "J" => Some(RequestedQuantity::J),
            "both" => Some(RequestedQuantity::Both),
            _ => None,
        }
    }

    pub fn wants_g(self) -> bool {
        matches!(self, RequestedQuantity::G | RequestedQuantity::Both)
    }

    pub fn wants_j(self) -> bool {
        matches!(self, RequestedQuantity::J | RequestedQuantity::Both)
    }
}

impl fmt::Display for RequestedQuantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RequestedQuantity::G => write!(f, "G"),
            RequestedQuantity::J => write!(f, "J"),
            RequestedQuantity::Both => write!(f, "both"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct InstanceFile {
    pub instance: Instance,
    pub quantity: RequestedQuantity,
}

pub fn load(path: &Path) -> Result<InstanceFile, String> {
    let text = fs::read_to_string(path)
        .map_err(|cause| format!("cannot read {}: {cause}", path.display()))?;
    parse(&text)
}

pub fn parse(text: &str) -> Result<InstanceFile, String> {
    let root: Value =
        serde_json::from_str(text).map_err(|cause| format!("invalid JSON: {cause}"))?;
    let object = root
        .as_object()
        .ok_or_else(|| "top level must be a JSON object".to_string())?;
    for key in object.keys() {
        if !matches!(key.as_str(), "theta" | "population" | "quantity") {
            return Err(format!(
                "unknown key {key:?}; expected theta, population, quantity"
            ));
        }
    }

    let theta_value = object
        .get("theta")
        .ok_or_else(|| "missing required key \"theta\"".to_string())?;
    let rows_value = theta_value
        .as_array()
        .ok_or_else(|| "\"theta\" must be an array of rows".to_string())?;
    let mut theta: Vec<Vec<Rat>> = Vec::with_capacity(rows_value.len());
    for (i, row_value) in rows_value.iter().enumerate() {
        let entries = row_value
            .as_array()
            .ok_or_else(|| format!("theta row {i} must be an array"))?;
        let mut row = Vec::with_capacity(entries.len());
        for (j, entry) in entries.iter().enumerate() {
            row.push(scalar(entry).map_err(|reason| format!("theta[{i}][{j}]: {reason}"))?);
        }
        theta.push(row);
    }

    let population_value = object
        .get("population")
        .ok_or_else(|| "missing required key \"population\"".to_string())?;
    let counts_value = population_value
        .as_array()
        .ok_or_else(|| "\"population\" must be an array of integers".to_string())?;
    let mut population: Vec<i64> = Vec::with_capacity(counts_value.len());
    for (j, count) in counts_value.iter().enumerate() {
        let number = count
            .as_number()
            .ok_or_else(|| format!("population[{j}] must be a JSON integer"))?;
        let literal = number.to_string();
        if literal.contains(['.', 'e', 'E']) {
            return Err(format!("population[{j}] must be an integer, got {literal}"));
        }
        population.push(
            number
                .as_i64()
                .ok_or_else(|| format!("population[{j}] out of range: {literal}"))?,
        );
    }

    let quantity = match object.get("quantity") {
        None => RequestedQuantity::Both,
        Some(value) => {
            let name = value
                .as_str()
                .ok_or_else(|| "\"quantity\" must be \"G\", \"J\" or \"both\"".to_string())?;
            RequestedQuantity::parse(name).ok_or_else(|| {
                format!("\"quantity\" must be \"G\", \"J\" or \"both\", got {name:?}")
            })?
        }
    };

    let instance = validate(theta, population).map_err(|cause| cause.to_string())?;
    Ok(InstanceFile { instance, quantity })
}

/// One exact scalar. JSON integers pass through; everything fractional
/// must arrive as a string so no precision is ever silently lost.
fn scalar(value: &Value) -> Result<Rat, String> {
    match value {
        Value::Number(number) => {
            let literal = number.to_string();
            if literal.contains(['.', 'e', 'E']) {
                return Err(format!(
                    "non-integer JSON number {literal}; write exact decimals as strings, e.g. \"{literal}\""
                ));
            }
            parse_scalar(&literal).map_err(|cause| cause.to_string())
        }
        Value::String(text) => parse_scalar(text).map_err(|cause| cause.to_string()),
        other => Err(format!(
            "expected an integer or an exact string literal, got {other}"
        )),
    }
}
