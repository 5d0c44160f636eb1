//! Arbitrary-precision rationals in canonical reduced form.
//!
//! `Rational` is `num_rational::BigRational`: the denominator is kept
//! positive and coprime to the numerator, so equality and sign tests are
//! exact. Serialization uses the `p/q` convention (`p` alone when `q = 1`),
//! which is exactly what `FromStr`/`Display` of the underlying type do.

use alloc::string::{String, ToString};
use core::fmt;
use core::str::FromStr;
use num_traits::{One, Signed, Zero};

pub use num_bigint::BigInt;
pub type Rational = num_rational::BigRational;

/// `n/d` as an exact rational. Panics when `d = 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError(pub String);

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not a rational `p/q`: {}", self.0)
    }
}

/// Parses `"p/q"` or `"p"` into a reduced rational. Rejects `q = 0`.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let t = s.trim();
    let r = Rational::from_str(t).map_err(|_| ParseRationalError(t.to_string()))?;
    Ok(r)
}

/// Formats as `"p/q"`, or `"p"` when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// True when `r` is an integer.
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Sign as -1, 0 or 1.
pub fn sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}
