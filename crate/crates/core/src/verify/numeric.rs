//! High-precision numeric cross-checks.
//!
//! Values are carried as exact rationals with decimal denominators, so the
//! only approximation is the truncated radical `r ≈ ⌊t^(1/n)·10^P⌋/10^P`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arith::roots::{isolate_real_roots, refine_root};
use crate::error::Result;
use crate::solvers::Certificate;
use crate::{QPoly, Rational};

pub const DEFAULT_DIGITS: u32 = 50;

fn pow10(k: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), k as usize)
}

/// `t^(1/n)` truncated to `precision` decimal places.
pub fn approx_radical(t: &Rational, n: u32, precision: u32) -> Rational {
    let scale = pow10(precision);
    let scaled = t.numer().abs() * num_traits::pow(scale.clone(), n as usize) / t.denom();
    let root = scaled.nth_root(n);
    let r = Rational::new(root, scale);
    if t.is_negative() {
        -r
    } else {
        r
    }
}

/// `|f(root)|` with the certificate root evaluated to `digits + 10` decimal
/// places. A genuine root gives a residual far below `10^(−digits+10)`.
pub fn numeric_cross_check(f: &QPoly, cert: &Certificate, digits: u32) -> Rational {
    let desc = cert.descriptor();
    let r = approx_radical(desc.radicand(), desc.index(), digits + 10);
    let x = cert.coeffs().iter().rev().fold(Rational::zero(), |acc, c| acc * &r + c) - cert.shift();
    f.eval(&x).abs()
}

/// Midpoints of isolating intervals for every distinct real root of `f`,
/// refined to width `10^−(digits+10)`.
pub fn numeric_real_roots(f: &QPoly, digits: u32) -> Result<Vec<Rational>> {
    let width = Rational::new(1.into(), pow10(digits + 10));
    let two = Rational::from_integer(2.into());
    Ok(isolate_real_roots(f)?
        .into_iter()
        .map(|iv| {
            let (lo, hi) = refine_root(f, iv, &width);
            (lo + hi) / &two
        })
        .collect())
}

/// Scientific notation with three significant digits, e.g. `1.23e-45`.
pub fn format_scientific(v: &Rational) -> String {
    if v.is_zero() {
        return "0".into();
    }
    let sign = if v.is_negative() { "-" } else { "" };
    let v = v.abs();
    // estimate the decimal exponent, then correct it
    let mut e = v.numer().to_string().len() as i64 - v.denom().to_string().len() as i64;
    let scaled = |e: i64| {
        if e >= 0 {
            &v / Rational::from_integer(pow10(e as u32))
        } else {
            &v * Rational::from_integer(pow10((-e) as u32))
        }
    };
    let one = Rational::from_integer(1.into());
    let ten = Rational::from_integer(10.into());
    while scaled(e) >= ten {
        e += 1;
    }
    while scaled(e) < one {
        e -= 1;
    }
    let m = scaled(e) * Rational::from_integer(100.into());
    let digits = m.round().to_integer();
    let (digits, e) = if digits >= BigInt::from(1000) { (BigInt::from(100), e + 1) } else { (digits, e) };
    let s = digits.to_string();
    format!("{sign}{}.{}e{e}", &s[..1], &s[1..])
}
