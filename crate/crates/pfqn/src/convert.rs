//! Conversion between the normalizing constant G and the simplex integral J:
//!
//! ```text
//! J(theta, N) = (N_1! ... N_d!) / (N + n - 1)! * G(theta, N)
//! ```
//!
//! The factor fixes the measure normalization: at N = 0 both the integrand
//! and G are 1, so J equals the simplex volume 1/(n - 1)!.

use num::BigInt;

use crate::combinatorics::Factorials;
use crate::instance::Instance;
use crate::scalar::Rat;

/// The multiplier (prod_j N_j!) / (N + n - 1)! taking G to J.
pub fn conversion_factor(instance: &Instance) -> Rat {
    let n = instance.n() as u64;
    let total = instance.total_population();
    let factorials = Factorials::up_to(total + n - 1);
    let mut numer = BigInt::from(1u32);
    for &count in instance.population().counts() {
        numer *= factorials.factorial(count);
    }
    Rat::new(numer, factorials.factorial(total + n - 1).clone())
}

/// J from G.
pub fn g_to_j(g: &Rat, instance: &Instance) -> Rat {
    g * conversion_factor(instance)
}

/// G from J; exact inverse of [`g_to_j`].
pub fn j_to_g(j: &Rat, instance: &Instance) -> Rat {
    j / conversion_factor(instance)
}
