//! Integer factorization by trial division with a configurable bound.

use std::sync::OnceLock;

use num_bigint::{BigInt, Sign};
use num_integer::Integer as _;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Environment variable overriding [`DEFAULT_FACTOR_BOUND`].
pub const FACTOR_BOUND_ENV: &str = "ONE_RADICAL_FACTOR_BOUND";
pub const DEFAULT_FACTOR_BOUND: u64 = 1_000_000;

/// The trial-division bound in effect: the environment override if it parses,
/// else the default. Read once per process.
pub fn factor_bound() -> u64 {
    static BOUND: OnceLock<u64> = OnceLock::new();
    *BOUND.get_or_init(|| {
        std::env::var(FACTOR_BOUND_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<u64>().ok())
            .filter(|&b| b >= 2)
            .unwrap_or(DEFAULT_FACTOR_BOUND)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    /// `-1` or `+1`.
    pub sign: i8,
    /// Prime powers in increasing prime order.
    pub factors: Vec<(BigInt, u32)>,
}

impl Factorization {
    pub fn product(&self) -> BigInt {
        let mag = self.factors.iter().fold(BigInt::one(), |acc, (p, e)| acc * num_traits::pow(p.clone(), *e as usize));
        if self.sign < 0 {
            -mag
        } else {
            mag
        }
    }
}

pub fn factor_integer(m: &BigInt) -> Result<Factorization> {
    factor_integer_with_bound(m, factor_bound())
}

/// Trial division by every candidate up to `bound`. A cofactor left over is
/// accepted as prime only when it is provably so (smaller than the square of
/// the last trial divisor); otherwise the call fails rather than guess.
pub fn factor_integer_with_bound(m: &BigInt, bound: u64) -> Result<Factorization> {
    if m.is_zero() {
        return Err(Error::Domain("cannot factor zero".into()));
    }
    let sign = if m.sign() == Sign::Minus { -1 } else { 1 };
    let mut rest = m.magnitude().clone();
    let mut factors = Vec::new();

    let mut push = |p: u64, e: u32| factors.push((BigInt::from(p), e));
    let mut d: u64 = 2;
    loop {
        if let Some(small) = rest.to_u128() {
            // fast path once the cofactor fits in a machine word
            let mut r = small;
            while d <= bound && (d as u128) * (d as u128) <= r {
                let mut e = 0;
                while r % d as u128 == 0 {
                    r /= d as u128;
                    e += 1;
                }
                if e > 0 {
                    push(d, e);
                }
                d += if d == 2 { 1 } else { 2 };
            }
            rest = r.into();
            break;
        }
        if d > bound {
            break;
        }
        let big_d = num_bigint::BigUint::from(d);
        let mut e = 0;
        loop {
            let (qt, rm) = rest.div_rem(&big_d);
            if !rm.is_zero() {
                break;
            }
            rest = qt;
            e += 1;
        }
        if e > 0 {
            push(d, e);
        }
        d += if d == 2 { 1 } else { 2 };
    }

    if !rest.is_one() {
        let d = num_bigint::BigUint::from(d);
        if &d * &d > rest {
            factors.push((BigInt::from(rest), 1));
        } else {
            return Err(Error::FactorizationTooLarge(rest.to_string(), bound));
        }
    }
    factors.sort();
    Ok(Factorization { sign, factors })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(m: i64) -> Factorization {
        factor_integer_with_bound(&BigInt::from(m), DEFAULT_FACTOR_BOUND).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(f(32).factors, vec![(BigInt::from(2), 5)]);
        let m = f(-12);
        assert_eq!(m.sign, -1);
        assert_eq!(m.factors, vec![(BigInt::from(2), 2), (BigInt::from(3), 1)]);
        let one = f(1);
        assert_eq!(one.sign, 1);
        assert!(one.factors.is_empty());
    }

    #[test]
    fn zero_is_rejected() {
        assert!(factor_integer(&BigInt::zero()).is_err());
    }

    #[test]
    fn large_prime_cofactor_accepted_when_provable() {
        // 1_000_003 is prime and below bound^2
        let m = BigInt::from(8u64 * 1_000_003);
        let fz = factor_integer_with_bound(&m, 1000).unwrap();
        assert_eq!(fz.factors, vec![(BigInt::from(2), 3), (BigInt::from(1_000_003), 1)]);
    }

    #[test]
    fn surviving_composite_is_an_error() {
        // product of two primes above the bound
        let m = BigInt::from(1_009u64) * BigInt::from(1_013u64);
        let err = factor_integer_with_bound(&m, 100).unwrap_err();
        assert!(matches!(err, Error::FactorizationTooLarge(_, 100)));
    }

    #[test]
    fn beyond_machine_word() {
        let m = num_traits::pow(BigInt::from(7), 60) * BigInt::from(-3);
        let fz = f(1).clone();
        assert!(fz.factors.is_empty());
        let fz = factor_integer(&m).unwrap();
        assert_eq!(fz.sign, -1);
        assert_eq!(fz.factors, vec![(BigInt::from(3), 1), (BigInt::from(7), 60)]);
        assert_eq!(fz.product(), m);
    }
}
