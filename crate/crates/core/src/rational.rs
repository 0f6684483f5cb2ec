//! Exact rational scalars.
//!
//! Every quantity in this crate is a [`Rational`]; nothing is ever rounded.
//! The text format is an optional sign, a decimal integer and an optional
//! `/denominator`, e.g. `-2/3` or `5`. Both the ASCII hyphen and the Unicode
//! minus sign are accepted on input; output always uses the ASCII hyphen.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Shorthand for the rational `num / den`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn parse_rational(text: &str) -> Result<Rational> {
    let trimmed = text.trim().replace('\u{2212}', "-");
    let bad = || Error::Parse(format!("invalid rational `{}`", text.trim()));
    if trimmed.is_empty() {
        return Err(bad());
    }
    let (num, den) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (trimmed.as_str(), None),
    };
    let digits = |s: &str, allow_sign: bool| {
        let body = if allow_sign {
            s.strip_prefix(['-', '+']).unwrap_or(s)
        } else {
            s
        };
        !body.is_empty() && body.bytes().all(|b| b.is_ascii_digit())
    };
    if !digits(num, true) {
        return Err(bad());
    }
    let num = BigInt::from_str(num.strip_prefix('+').unwrap_or(num)).map_err(|_| bad())?;
    let den = match den {
        Some(d) => {
            if !digits(d, false) {
                return Err(bad());
            }
            let d = BigInt::from_str(d).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!(
                    "zero denominator in `{}`",
                    text.trim()
                )));
            }
            d
        }
        None => BigInt::one(),
    };
    Ok(Rational::new(num, den))
}

/// Formats as `n` or `n/d` in lowest terms with a positive denominator.
pub fn format_rational(value: &Rational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Parses a comma-separated list of rationals of exactly `len` entries.
pub fn parse_list(text: &str, len: usize) -> Result<Vec<Rational>> {
    let values = text
        .split(',')
        .map(parse_rational)
        .collect::<Result<Vec<_>>>()?;
    if values.len() != len {
        return Err(Error::Parse(format!(
            "expected {len} comma-separated rationals, got {} in `{text}`",
            values.len()
        )));
    }
    Ok(values)
}

pub fn format_list(values: &[Rational]) -> String {
    values
        .iter()
        .map(format_rational)
        .collect::<Vec<_>>()
        .join(",")
}

/// Scales a homogeneous vector to coprime integers with the first nonzero
/// entry positive. Returns `None` for the zero vector.
pub fn canonical_integers(values: &[Rational]) -> Option<Vec<BigInt>> {
    use num_integer::Integer;

    let lead = values.iter().find(|v| !v.is_zero())?;
    let lcm = values
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let mut ints: Vec<BigInt> = values
        .iter()
        .map(|v| (v * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    let flip = lead.is_negative();
    for v in &mut ints {
        *v /= &gcd;
        if flip {
            *v = -v.clone();
        }
    }
    Some(ints)
}

pub(crate) mod serde_str {
    use serde::Serializer;

    use super::{format_rational, Rational};

    pub fn serialize<S: Serializer>(value: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(value))
    }

    pub fn serialize_vec<S: Serializer>(values: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(values.iter().map(format_rational))
    }
}
