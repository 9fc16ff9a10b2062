//! Exact scalar arithmetic.
//!
//! Every quantity in the crate is an arbitrary-precision rational: values
//! are always in lowest terms with a positive denominator, arithmetic is
//! exact, and equality is decidable. No floating point enters any
//! computation path; decimal output is a rendering of the exact value.

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::Error;

/// The scalar type: an arbitrary-precision rational, kept in canonical
/// reduced form (lowest terms, denominator > 0).
pub type Rat = BigRational;

/// Rational from an integer.
pub fn int(value: i64) -> Rat {
    Rat::from_integer(BigInt::from(value))
}

/// Rational p/q. Panics if `q` is zero; use [`parse_scalar`] for untrusted
/// input.
pub fn ratio(p: i64, q: i64) -> Rat {
    assert!(q != 0, "zero denominator");
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Exact division; a zero divisor is an error, never a value.
pub fn checked_div(a: &Rat, b: &Rat) -> Result<Rat, Error> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(a / b)
}

/// `base^exp` by binary exponentiation; `pow(x, 0) = 1` for every `x`,
/// including zero.
pub fn pow(base: &Rat, exp: u64) -> Rat {
    let mut result = Rat::one();
    let mut square = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            result *= &square;
        }
        e >>= 1;
        if e > 0 {
            square = &square * &square;
        }
    }
    result
}

/// Parse a scalar literal exactly: an integer (`"-3"`), a fraction
/// (`"7/12"`), or a finite decimal (`"0.25"` becomes 1/4). Anything else is
/// rejected; nothing is ever rounded.
pub fn parse_scalar(input: &str) -> Result<Rat, Error> {
    let s = input.trim();
    let malformed = |reason| Error::MalformedScalar {
        literal: input.to_string(),
        reason,
    };
    if s.is_empty() {
        return Err(malformed("empty literal"));
    }
    if let Some((num, den)) = s.split_once('/') {
        let p: BigInt = num
            .trim()
            .parse()
            .map_err(|_| malformed("invalid numerator"))?;
        let q: BigInt = den
            .trim()
            .parse()
            .map_err(|_| malformed("invalid denominator"))?;
        if q.is_zero() {
            return Err(malformed("zero denominator"));
        }
        return Ok(Rat::new(p, q));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let (sign, digits) = match whole.strip_prefix('-') {
            Some(rest) => (Sign::Minus, rest),
            None => (Sign::Plus, whole.strip_prefix('+').unwrap_or(whole)),
        };
        if digits.is_empty() && frac.is_empty() {
            return Err(malformed("no digits"));
        }
        if !digits.chars().all(|c| c.is_ascii_digit()) || !frac.chars().all(|c| c.is_ascii_digit())
        {
            return Err(malformed("invalid decimal digits"));
        }
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let whole_part: BigInt = if digits.is_empty() {
            BigInt::zero()
        } else {
            digits.parse().unwrap()
        };
        let frac_part: BigInt = if frac.is_empty() {
            BigInt::zero()
        } else {
            frac.parse().unwrap()
        };
        let magnitude = whole_part * &scale + frac_part;
        let signed = if sign == Sign::Minus {
            -magnitude
        } else {
            magnitude
        };
        return Ok(Rat::new(signed, scale));
    }
    let p: BigInt = s.parse().map_err(|_| malformed("invalid integer"))?;
    Ok(Rat::from_integer(p))
}

/// Canonical `"p/q"` rendering in lowest terms (plain `"p"` for integers).
pub fn fraction_string(value: &Rat) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

fn pow10(e: u64) -> BigInt {
    BigInt::from(10u32).pow(e as u32)
}

/// True iff `p/q >= 10^e` for positive `p`, `q`.
fn at_least_pow10(p: &BigInt, q: &BigInt, e: i64) -> bool {
    if e >= 0 {
        *p >= q * pow10(e as u64)
    } else {
        p * pow10((-e) as u64) >= *q
    }
}

/// Advisory decimal rendering with `significant` significant digits,
/// rounded half away from zero. The exact value is what the fraction
/// rendering carries; this is for human consumption only.
pub fn decimal_string(value: &Rat, significant: usize) -> String {
    assert!(significant > 0);
    if value.is_zero() {
        return "0".to_string();
    }
    let magnitude = value.abs();
    let p = magnitude.numer();
    let q = magnitude.denom();
    // decimal exponent e with 10^e <= |value| < 10^(e+1)
    let mut e = p.to_string().len() as i64 - q.to_string().len() as i64;
    while !at_least_pow10(p, q, e) {
        e -= 1;
    }
    while at_least_pow10(p, q, e + 1) {
        e += 1;
    }
    let shift = significant as i64 - 1 - e;
    let (num, den) = if shift >= 0 {
        (p * pow10(shift as u64), q.clone())
    } else {
        (p.clone(), q * pow10((-shift) as u64))
    };
    let (quot, rem) = num::Integer::div_rem(&num, &den);
    let scaled = if BigInt::from(2) * rem >= den {
        quot + 1u32
    } else {
        quot
    };
    let mut digits = scaled.to_string();
    if digits.len() > significant {
        // rounding carried into a new leading digit; trailing digit is zero
        digits.truncate(significant);
        e += 1;
    }
    let sign = if value.is_negative() { "-" } else { "" };
    if e >= significant as i64 || e < -4 {
        let head = &digits[..1];
        let tail = &digits[1..];
        format!(
            "{sign}{head}.{tail}e{}{}",
            if e < 0 { "-" } else { "+" },
            e.abs()
        )
    } else if e >= 0 {
        let split = (e + 1) as usize;
        format!("{sign}{}.{}", &digits[..split], &digits[split..])
    } else {
        let zeros = "0".repeat((-e - 1) as usize);
        format!("{sign}0.{zeros}{digits}")
    }
}
