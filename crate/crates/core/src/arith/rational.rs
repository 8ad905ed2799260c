//! Rational scalar helpers: construction, the textual `p/q` syntax, and
//! exact root extraction.

use num_bigint::{BigInt, Sign};
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// Shorthand constructor; panics on a zero denominator.
pub fn q(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn from_int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Parses `a` or `a/b` with optional leading sign; surrounding whitespace is ignored.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Domain(format!("malformed rational literal {text:?}"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = match den {
        Some(d) if d.starts_with(['+', '-']) => return Err(bad()),
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn format_rational(v: &Rational) -> String {
    v.to_string()
}

/// Exact integer nth root of a non-negative integer, if one exists.
fn exact_int_root(m: &BigInt, n: u32) -> Option<BigInt> {
    debug_assert!(!m.is_negative());
    let r = m.nth_root(n);
    (num_traits::pow(r.clone(), n as usize) == *m).then_some(r)
}

/// Returns `u` with `uⁿ = v` exactly, or `None` when no rational nth root
/// exists. For even `n` the non-negative root is returned.
pub fn nth_root_exact(v: &Rational, n: u32) -> Result<Option<Rational>> {
    if n == 0 {
        return Err(Error::Domain("root index must be positive".into()));
    }
    if n.is_multiple_of(2) && v.is_negative() {
        return Err(Error::Domain(format!("even root ({n}) of negative number {v}")));
    }
    let num = v.numer().abs();
    let den = v.denom().clone();
    let (Some(rn), Some(rd)) = (exact_int_root(&num, n), exact_int_root(&den, n)) else {
        return Ok(None);
    };
    let root = Rational::new(rn, rd);
    Ok(Some(if v.is_negative() { -root } else { root }))
}

/// Square root in ℚ of a non-negative rational; `None` for negatives and non-squares.
pub fn sqrt_exact(v: &Rational) -> Option<Rational> {
    if v.is_negative() {
        return None;
    }
    nth_root_exact(v, 2).expect("non-negative input")
}

/// Least common multiple of the denominators of `vals` (1 for an empty slice).
pub fn denom_lcm<'a>(vals: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    vals.into_iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

pub fn sign_of(v: &Rational) -> Sign {
    v.numer().sign()
}

/// Serde adapters that carry rationals as strings.
pub mod serde_str {
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    use super::{format_rational, parse_rational};
    use crate::Rational;

    pub fn serialize<S: Serializer>(v: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(v))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(D::Error::custom)
    }

    pub mod vec {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for x in v {
                seq.serialize_element(&format_rational(x))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
            Vec::<String>::deserialize(d)?.iter().map(|t| parse_rational(t).map_err(D::Error::custom)).collect()
        }
    }

    pub mod option {
        use super::*;

        pub fn serialize<S: Serializer>(v: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
            match v {
                Some(x) => s.serialize_some(&format_rational(x)),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
            Option::<String>::deserialize(d)?.map(|t| parse_rational(&t).map_err(D::Error::custom)).transpose()
        }
    }
}
