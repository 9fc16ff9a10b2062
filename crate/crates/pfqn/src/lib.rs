//! Exact computation of normalizing constants of product-form closed
//! queueing networks, and of the equivalent integrals of products of
//! linear forms over the unit simplex.
//!
//! A problem instance is a rational n x d matrix theta (stations x
//! classes) and a population vector N of d nonnegative integers. Two
//! quantities are computed, always in exact rational arithmetic:
//!
//! * `G(theta, N)` — the normalizing constant: the sum over all ways of
//!   placing the N jobs on the n stations of per-state product-form
//!   weights;
//! * `J(theta, N)` — the integral over the unit simplex of
//!   `prod_j (sum_i theta_ij x_i)^{N_j}`, related to G by
//!   `J = (prod_j N_j!) / (N + n - 1)! * G`.
//!
//! Several independent algorithms are provided and cross-validated:
//! table-driven recurrences ([`convolution_g`], [`recal_g`]), closed-form
//! sums ([`koe58_g`], [`gen_g`], [`explicit1_g`], [`explicit_repeated_g`],
//! [`explicit2_g`]), and ground-truth oracles that share no code with
//! either family ([`bruteforce_g`], [`taylor_g`],
//! [`monomial_integrate_j`]). Every computation reports a work counter
//! (table cells filled or sum terms evaluated) so complexity claims are
//! measurable, not just asymptotic.

pub mod combinatorics;
pub mod convert;
pub mod dispatch;
pub mod error;
pub mod explicit;
pub mod instance;
pub mod lattice;
pub mod oracles;
pub mod population;
pub mod recurrences;
pub mod result;
pub mod scalar;
pub mod theta;

pub use convert::{conversion_factor, g_to_j, j_to_g};
pub use dispatch::{auto_select, convolution_work_estimate, recal_state_estimate, run_algorithm};
pub use error::Error;
pub use explicit::{
    explicit1_g, explicit2_g, explicit_repeated_g, gen_g, koe58_g, CoefficientGroups,
};
pub use instance::{validate, Instance};
pub use oracles::{
    bruteforce_g, enumerate_states, monomial_integrate_j, state_probability, state_space_size,
    state_weight, taylor_coefficient, taylor_g, Guards, NetworkState,
};
pub use population::Population;
pub use recurrences::{convolution_g, recal_g, ConvolutionTable, RowMultiplicity};
pub use result::{Algorithm, ComputationResult, Quantity, WorkCounters};
pub use scalar::{decimal_string, fraction_string, parse_scalar, Rat};
pub use theta::ThetaMatrix;
