//! The bench subcommand: sweep a generated instance family and emit one
//! record per (instance, algorithm) with work counters, wall time, and a
//! hash of the exact value.
//!
//! Instances are generated from the seed and the family point (n, d,
//! total) alone, so records are reproducible and independent of list
//! order. Wall times vary run to run by nature; counters and value hashes
//! must not.

use std::time::Instant;

use num::BigInt;
use pfqn::{fraction_string, run_algorithm, validate, Algorithm, Guards, Instance, Quantity, Rat};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::output::OutputMode;
use crate::CliError;

pub struct BenchPlan {
    pub stations: Vec<u64>,
    pub classes: Vec<u64>,
    pub totals: Vec<u64>,
    pub algorithms: Vec<Algorithm>,
    pub seed: u64,
}

/// Bench tables come out as `csv` (the text mode) or `json`.
pub fn parse_format(name: &str) -> Option<OutputMode> {
    match name {
        "csv" => Some(OutputMode::Text),
        "json" => Some(OutputMode::Json),
        _ => None,
    }
}

#[derive(Serialize)]
struct BenchRecord {
    n: u64,
    d: u64,
    total: u64,
    algorithm: &'static str,
    quantity: &'static str,
    table_cells: u64,
    terms: u64,
    wall_ms: String,
    value_hash: String,
    status: String,
}

#[derive(Serialize)]
struct BenchOut {
    seed: u64,
    records: Vec<BenchRecord>,
}

/// Deterministic generator stream for one family point.
fn point_rng(seed: u64, n: u64, d: u64, total: u64) -> ChaCha8Rng {
    // distinct odd multipliers keep distinct points on distinct streams
    let mixed = seed
        ^ n.wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ d.wrapping_mul(0xC2B2_AE3D_27D4_EB4F)
        ^ total.wrapping_mul(0x1656_67B1_9E37_79F9);
    ChaCha8Rng::seed_from_u64(mixed)
}

/// Positive rational coefficients, total split as evenly as the class
/// count allows (earlier classes take the remainder).
pub fn generate_instance(seed: u64, n: u64, d: u64, total: u64) -> Instance {
    let mut rng = point_rng(seed, n, d, total);
    let theta: Vec<Vec<Rat>> = (0..n)
        .map(|_| {
            (0..d)
                .map(|_| {
                    let q: i64 = rng.gen_range(1..=4);
                    let p: i64 = rng.gen_range(1..=20);
                    Rat::new(BigInt::from(p), BigInt::from(q))
                })
                .collect()
        })
        .collect();
    let base = total / d;
    let remainder = total % d;
    let population: Vec<i64> = (0..d)
        .map(|j| (base + if j < remainder { 1 } else { 0 }) as i64)
        .collect();
    validate(theta, population).expect("generated instances are valid")
}

fn short_hash(value: &Rat) -> String {
    let digest = Sha256::digest(fraction_string(value).as_bytes());
    let mut hex = String::with_capacity(16);
    for byte in digest.iter().take(8) {
        hex.push_str(&format!("{byte:02x}"));
    }
    hex
}

pub fn run(plan: &BenchPlan, mode: OutputMode, guards: &Guards) -> Result<String, CliError> {
    if plan.stations.is_empty() || plan.classes.is_empty() || plan.totals.is_empty() {
        return Err(CliError::Input(
            "bench needs nonempty --stations, --classes and --totals".to_string(),
        ));
    }
    if plan.algorithms.is_empty() {
        return Err(CliError::Input(
            "bench needs at least one algorithm".to_string(),
        ));
    }
    if plan.stations.contains(&0) {
        return Err(CliError::Input("stations must be at least 1".to_string()));
    }
    if plan.classes.contains(&0) {
        return Err(CliError::Input("classes must be at least 1".to_string()));
    }

    let mut records = Vec::new();
    for &n in &plan.stations {
        for &d in &plan.classes {
            for &total in &plan.totals {
                let instance = generate_instance(plan.seed, n, d, total);
                for &algorithm in &plan.algorithms {
                    let started = Instant::now();
                    let outcome = run_algorithm(&instance, algorithm, guards);
                    let wall_ms = format!("{:.3}", started.elapsed().as_secs_f64() * 1e3);
                    let record = match outcome {
                        Ok(result) => BenchRecord {
                            n,
                            d,
                            total,
                            algorithm: algorithm.name(),
                            quantity: match result.quantity {
                                Quantity::G => "G",
                                Quantity::J => "J",
                            },
                            table_cells: result.work.table_cells,
                            terms: result.work.terms,
                            wall_ms,
                            value_hash: short_hash(&result.value),
                            status: "ok".to_string(),
                        },
                        // compact kind name: keeps the status field free of commas
                        Err(error) => BenchRecord {
                            n,
                            d,
                            total,
                            algorithm: algorithm.name(),
                            quantity: "",
                            table_cells: 0,
                            terms: 0,
                            wall_ms,
                            value_hash: String::new(),
                            status: format!("error: {}", error.kind_name()),
                        },
                    };
                    records.push(record);
                }
            }
        }
    }

    Ok(match mode {
        OutputMode::Json => serde_json::to_string(&BenchOut {
            seed: plan.seed,
            records,
        })
        .expect("fixed schema serializes"),
        OutputMode::Text => {
            let mut lines = vec![
                "n,d,total,algorithm,quantity,table_cells,terms,wall_ms,value_hash,status"
                    .to_string(),
            ];
            for r in &records {
                lines.push(format!(
                    "{},{},{},{},{},{},{},{},{},{}",
                    r.n,
                    r.d,
                    r.total,
                    r.algorithm,
                    r.quantity,
                    r.table_cells,
                    r.terms,
                    r.wall_ms,
                    r.value_hash,
                    r.status
                ));
            }
            lines.join("\n")
        }
    })
}
