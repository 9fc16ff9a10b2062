//! Exact factorials, binomials, and composition enumeration over
//! arbitrary-precision integers.

use num::{BigInt, One, Zero};

/// Factorial table, built once per computation up to the largest argument
/// the computation can need (typically N + n - 1).
pub struct Factorials {
    table: Vec<BigInt>,
}

impl Factorials {
    pub fn up_to(max: u64) -> Self {
        let mut table = Vec::with_capacity(max as usize + 1);
        table.push(BigInt::one());
        for k in 1..=max {
            let next = table.last().unwrap() * BigInt::from(k);
            table.push(next);
        }
        Factorials { table }
    }

    pub fn factorial(&self, k: u64) -> &BigInt {
        &self.table[k as usize]
    }

    /// C(n, k) from the table; requires n within the table bound.
    pub fn binomial(&self, n: u64, k: u64) -> BigInt {
        if k > n {
            return BigInt::zero();
        }
        self.factorial(n) / (self.factorial(k) * self.factorial(n - k))
    }

    /// Multinomial coefficient total! / (parts_1! ... parts_m!).
    pub fn multinomial(&self, total: u64, parts: &[u64]) -> BigInt {
        debug_assert_eq!(total, parts.iter().sum::<u64>());
        let mut denom = BigInt::one();
        for &p in parts {
            denom *= self.factorial(p);
        }
        self.factorial(total) / denom
    }
}

/// C(n, k) without a table; every intermediate division is exact.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut result = BigInt::one();
    for i in 0..k {
        result = result * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    result
}

/// All vectors of `parts` nonnegative integers summing to `total`, in a
/// fixed deterministic order (first coordinate descending). There are
/// C(total + parts - 1, parts - 1) of them.
pub fn compositions(total: u64, parts: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut current = vec![0u64; parts];
    fill_compositions(total, 0, &mut current, &mut out);
    out
}

fn fill_compositions(
    remaining: u64,
    index: usize,
    current: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
) {
    if index + 1 == current.len() {
        current[index] = remaining;
        out.push(current.clone());
        return;
    }
    if current.is_empty() {
        if remaining == 0 {
            out.push(Vec::new());
        }
        return;
    }
    let mut take = remaining + 1;
    while take > 0 {
        take -= 1;
        current[index] = take;
        fill_compositions(remaining - take, index + 1, current, out);
    }
}
