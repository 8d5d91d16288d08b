//! Exact rational numbers.
//!
//! All numeric results in this crate are arbitrary-precision rationals kept in
//! lowest terms with a positive denominator; nothing is ever rounded through
//! floating point.

use num_bigint::BigInt;

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// The integer `n` as a rational.
pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The fraction `num/den`. Panics when `den` is zero.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p/q"` or `"p"`, the same forms [`Rational`]'s `Display` produces.
pub fn parse_rational(text: &str) -> Result<Rational> {
    text.trim().parse().map_err(|_| Error::Parse {
        line: 0,
        reason: format!("invalid rational {text:?}"),
    })
}
