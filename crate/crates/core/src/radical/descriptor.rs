//! Radical descriptors `(n, t)` naming the real number `t^(1/n)`, and their
//! normalization to the minimal index.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::arith::factor::factor_integer;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::Rational;

/// The real radical `r = t^(1/n)`.
///
/// `normalized` records that `n` is minimal with `rⁿ ∈ ℚ`, i.e. that
/// `xⁿ − t` is irreducible over ℚ. Only then is `ℚ[r]` a field with
/// `{1, r, …, r^{n−1}}` linearly independent.
#[derive(Clone, Debug)]
pub struct RadicalDescriptor<T> {
    index: u32,
    radicand: T,
    normalized: bool,
}

impl<T: PartialEq> PartialEq for RadicalDescriptor<T> {
    fn eq(&self, other: &Self) -> bool {
        self.index == other.index && self.radicand == other.radicand
    }
}

impl<T: Scalar + PartialOrd> RadicalDescriptor<T> {
    /// A descriptor with no normalization claim. The radicand must admit a
    /// real root: `t ≥ 0` or `n` odd.
    pub fn new(index: u32, radicand: T) -> Result<Self> {
        if index == 0 {
            return Err(Error::Domain("radical index must be positive".into()));
        }
        if index.is_multiple_of(2) && radicand < T::zero() {
            return Err(Error::Domain(format!("even index {index} with negative radicand has no real root")));
        }
        Ok(RadicalDescriptor { index, radicand, normalized: false })
    }
}

impl<T: Scalar> RadicalDescriptor<T> {
    /// Marks the descriptor normalized without checking. Intended for scalar
    /// types where normalization cannot be decided (floats).
    pub fn assume_normalized(mut self) -> Self {
        self.normalized = true;
        self
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    pub fn radicand(&self) -> &T {
        &self.radicand
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    pub(crate) fn require_normalized(&self) -> Result<()>
    where
        T: std::fmt::Display,
    {
        if self.normalized {
            Ok(())
        } else {
            Err(Error::NotNormalized { index: self.index, radicand: self.radicand.to_string() })
        }
    }
}

impl RadicalDescriptor<Rational> {
    /// Builds `(n, t)` and certifies it normalized, failing with
    /// [`Error::NotNormalized`] when a smaller index describes the same number.
    pub fn normalized(index: u32, radicand: Rational) -> Result<Self> {
        let d = Self::new(index, radicand)?;
        let (norm, _) = normalize_radical(&d)?;
        if norm.index != d.index {
            return Err(Error::NotNormalized { index: d.index, radicand: d.radicand.to_string() });
        }
        Ok(norm)
    }
}

/// How powers of an old radical read in terms of its normalized replacement:
/// `r_old^j = factor · r_new^exponent`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExponentMap {
    images: Vec<(Rational, u32)>,
}

impl ExponentMap {
    pub fn image(&self, j: usize) -> &(Rational, u32) {
        &self.images[j]
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }
}

/// Rewrites `(n, t)` with the minimal index `d` such that `rᵈ ∈ ℚ`.
///
/// With `|t| = ∏ pᵢ^{eᵢ}` (exponents of denominator primes negative) and
/// `g = gcd(n, e₁, e₂, …)`, the real radical satisfies `r = t′^(1/d)` where
/// `d = n/g` and `t′ = sign(t)·∏ pᵢ^{eᵢ/g}`; for `t < 0` the index is odd so
/// `g` is odd too and the sign passes through. The same real number is
/// denoted before and after, so `r_old^j = t′^{⌊j/d⌋}·r_new^{j mod d}`.
pub fn normalize_radical(d: &RadicalDescriptor<Rational>) -> Result<(RadicalDescriptor<Rational>, ExponentMap)> {
    let t = &d.radicand;
    if t.is_zero() {
        return Err(Error::Domain("radicand zero does not define a radical extension".into()));
    }
    let num = factor_integer(t.numer())?;
    let den = factor_integer(t.denom())?;
    let g = num.factors.iter().chain(den.factors.iter()).fold(d.index, |g, (_, e)| g.gcd(e));
    let index = d.index / g;
    let root = |fs: &[(BigInt, u32)]| {
        fs.iter().fold(BigInt::one(), |acc, (p, e)| acc * num_traits::pow(p.clone(), (*e / g) as usize))
    };
    let mut radicand = Rational::new(root(&num.factors), root(&den.factors));
    if t.is_negative() {
        radicand = -radicand;
    }
    let images = (0..d.index as usize)
        .map(|j| {
            let j = j as u32;
            (num_traits::pow(radicand.clone(), (j / index) as usize), j % index)
        })
        .collect();
    Ok((RadicalDescriptor { index, radicand, normalized: true }, ExponentMap { images }))
}
