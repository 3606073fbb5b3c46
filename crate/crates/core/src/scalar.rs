//! Exact scalars.
//!
//! Every evaluated quantity in this crate (heights, edge lengths, folding
//! values, cone witnesses) is an arbitrary-precision rational kept in lowest
//! terms with a positive denominator. `num`'s `BigRational` already maintains
//! that normal form, so it is used directly.

use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar.
pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Sign as -1, 0 or 1.
pub fn sign(x: &Rational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Parses `"p/q"` or `"p"`. Surrounding whitespace is rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    if s.is_empty() || s.trim() != s {
        return Err(Error::Parse(format!("invalid rational {s:?}")));
    }
    if let Some((_, d)) = s.split_once('/') {
        if d.starts_with('-') || d.starts_with('+') {
            return Err(Error::Parse(format!("denominator of {s:?} must be unsigned")));
        }
    }
    let q = Rational::from_str(s).map_err(|_| Error::Parse(format!("invalid rational {s:?}")))?;
    Ok(q)
}

/// Canonical `"p/q"` form; integers are written without a denominator.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("3/6").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-4").unwrap(), int(-4));
        assert_eq!(format_rational(&ratio(-6, 4)), "-3/2");
        assert_eq!(format_rational(&int(7)), "7");
        assert!(parse_rational(" 1/2").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1/-2").is_err());
    }

    #[test]
    fn sign_values() {
        assert_eq!(sign(&ratio(-1, 3)), -1);
        assert_eq!(sign(&zero()), 0);
        assert_eq!(sign(&int(5)), 1);
    }
}
