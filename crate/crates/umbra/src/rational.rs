//! Exact rational scalars and the integer combinatorics shared by every
//! module: parsing/formatting of `p/q` strings, big-integer factorials and
//! falling products, and serde adapters for the canonical string encoding.

use std::error::Error;
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

/// Rational from an integer pair. Panics on a zero denominator.
pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

/// Rational from an integer.
pub fn rat_int(value: i64) -> Rat {
    Rat::from_integer(BigInt::from(value))
}

/// Error raised when a string is not a valid `p/q` or integer literal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError {
    input: String,
    reason: String,
}

impl ParseRationalError {
    fn new(input: &str, reason: impl Into<String>) -> Self {
        Self {
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational '{}': {}", self.input, self.reason)
    }
}

impl Error for ParseRationalError {}

/// Parses `"p/q"` or an integer literal `"p"` into a rational in canonical
/// lowest terms with positive denominator.
pub fn parse_rational(s: &str) -> Result<Rat, ParseRationalError> {
    let trimmed = s.trim();
    if trimmed.is_empty() {
        return Err(ParseRationalError::new(s, "empty string"));
    }
    let (numer_str, denom_str) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (trimmed, "1"),
    };
    let numer: BigInt = numer_str
        .parse()
        .map_err(|_| ParseRationalError::new(s, "numerator is not an integer"))?;
    let denom: BigInt = denom_str
        .parse()
        .map_err(|_| ParseRationalError::new(s, "denominator is not an integer"))?;
    if denom.is_zero() {
        return Err(ParseRationalError::new(s, "denominator is zero"));
    }
    Ok(Rat::new(numer, denom))
}

/// Formats a rational canonically as `"p/q"` (lowest terms, `q > 0`),
/// always including the denominator (`"0/1"`, `"2/1"`, `"-3/4"`).
pub fn format_rational(value: &Rat) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// Exact integer power of a rational; negative exponents invert.
/// Panics when asked for a negative power of zero. `0^0 = 1`.
pub fn rat_pow(base: &Rat, exp: i64) -> Rat {
    if exp >= 0 {
        num::pow::pow(base.clone(), exp as usize)
    } else {
        assert!(!base.is_zero(), "rat_pow: negative power of zero");
        num::pow::pow(base.recip(), (-exp) as usize)
    }
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num::integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// Falling product `n·(n-1)···(n-r+1) = n!/(n-r)!` for `n >= r`.
pub fn falling(n: usize, r: usize) -> BigInt {
    assert!(r <= n, "falling: r = {} exceeds n = {}", r, n);
    let mut acc = BigInt::one();
    for j in 0..r {
        acc *= BigInt::from(n - j);
    }
    acc
}

/// Serde adapter serializing a rational as its canonical `"p/q"` string.
pub mod rat_string {
    use super::{format_rational, parse_rational, Rat};
    use serde::de::Error as DeError;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Rat, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&format_rational(value))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(de)?;
        parse_rational(&s).map_err(D::Error::custom)
    }
}

/// Serde adapter for vectors of rationals in the `"p/q"` string encoding.
pub mod rat_vec_string {
    use super::{format_rational, parse_rational, Rat};
    use serde::de::Error as DeError;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(values: &[Rat], ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_seq(values.iter().map(format_rational))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<Rat>, D::Error> {
        let strings = Vec::<String>::deserialize(de)?;
        strings
            .iter()
            .map(|s| parse_rational(s).map_err(D::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_integer_literal() {
        assert_eq!(parse_rational("7").unwrap(), rat_int(7));
        assert_eq!(parse_rational("-3").unwrap(), rat_int(-3));
    }

    #[test]
    fn parse_fraction_canonicalizes() {
        // Reduced to lowest terms with positive denominator.
        assert_eq!(parse_rational("4/6").unwrap(), rat(2, 3));
        assert_eq!(parse_rational("1/-2").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational(" -2 / 4 ").unwrap(), rat(-1, 2));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/2/3").is_err());
        assert!(parse_rational("1.5").is_err());
    }

    #[test]
    fn format_always_includes_denominator() {
        assert_eq!(format_rational(&rat_int(0)), "0/1");
        assert_eq!(format_rational(&rat_int(2)), "2/1");
        assert_eq!(format_rational(&rat(-6, 8)), "-3/4");
    }

    #[test]
    fn round_trip_parse_format() {
        for s in ["0/1", "2/1", "-3/4", "22/7"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
    }

    #[test]
    fn powers() {
        assert_eq!(rat_pow(&rat(2, 3), 2), rat(4, 9));
        assert_eq!(rat_pow(&rat(2, 3), -1), rat(3, 2));
        assert_eq!(rat_pow(&rat_int(0), 0), rat_int(1));
        assert_eq!(rat_pow(&rat_int(5), 0), rat_int(1));
    }

    #[test]
    fn combinatorics() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(falling(5, 2), BigInt::from(20));
        assert_eq!(falling(4, 0), BigInt::from(1));
    }
}
