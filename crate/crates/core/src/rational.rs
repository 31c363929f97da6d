//! Exact rationals.
//!
//! Every scalar in this crate is a [`Rational`], an arbitrary-precision
//! fraction kept in lowest terms with a positive denominator. Text form is
//! `p/q`, or just `p` when the denominator is one.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Shorthand for the fraction `numer / denom`.
///
/// Panics if `denom` is zero.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"`. Non-reduced input such as `"2/4"` is accepted
/// and reduced; a zero denominator is rejected.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let fail = |reason: &str| Error::ParseRational {
        text: text.to_owned(),
        reason: reason.to_owned(),
    };
    let trimmed = text.trim();
    let (numer, denom) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (trimmed, "1"),
    };
    let parse_int = |s: &str| -> Result<BigInt> {
        if s.is_empty() {
            return Err(fail("empty integer"));
        }
        s.parse::<BigInt>().map_err(|_| fail("not an integer"))
    };
    let numer = parse_int(numer)?;
    let denom = parse_int(denom)?;
    if denom.is_zero() {
        return Err(fail("zero denominator"));
    }
    Ok(Rational::new(numer, denom))
}

/// Product of a sequence of rationals; one for the empty sequence.
pub fn product<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Rational {
    values
        .into_iter()
        .fold(Rational::one(), |acc, v| acc * v)
}
