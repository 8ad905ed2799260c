//! Quadratic extensions `K[i]` (i² = −1) and `K[ε]` (ε² = −ε − 1) of a
//! radical ring `K = ℚ[r]`, enough to evaluate conjugate roots exactly.

use std::fmt;

use super::descriptor::RadicalDescriptor;
use super::element::RadicalElement;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuadExt {
    /// `i² = −1`.
    I,
    /// Primitive cube root of unity, `ε² + ε + 1 = 0`.
    Eps,
}

/// `re + im·u` where `u` is the adjoined symbol of `kind`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadExtElement<T> {
    pub re: RadicalElement<T>,
    pub im: RadicalElement<T>,
    pub kind: QuadExt,
}

impl<T: Scalar> QuadExtElement<T> {
    pub fn new(re: RadicalElement<T>, im: RadicalElement<T>, kind: QuadExt) -> Result<Self> {
        if re.descriptor() != im.descriptor() {
            return Err(Error::DescriptorMismatch("real and imaginary parts".into()));
        }
        Ok(QuadExtElement { re, im, kind })
    }

    pub fn from_base(re: RadicalElement<T>, kind: QuadExt) -> Self {
        let im = RadicalElement::zero(re.descriptor());
        QuadExtElement { re, im, kind }
    }

    pub fn zero(desc: &RadicalDescriptor<T>, kind: QuadExt) -> Self {
        Self::from_base(RadicalElement::zero(desc), kind)
    }

    pub fn one(desc: &RadicalDescriptor<T>, kind: QuadExt) -> Self {
        Self::from_base(RadicalElement::one(desc), kind)
    }

    /// The adjoined symbol `i` or `ε`.
    pub fn unit(desc: &RadicalDescriptor<T>, kind: QuadExt) -> Self {
        QuadExtElement { re: RadicalElement::zero(desc), im: RadicalElement::one(desc), kind }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.kind != other.kind {
            return Err(Error::DescriptorMismatch(format!("extension kinds {:?} and {:?}", self.kind, other.kind)));
        }
        if self.re.descriptor() != other.re.descriptor() {
            return Err(Error::DescriptorMismatch("base radical rings differ".into()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(QuadExtElement { re: &self.re + &other.re, im: &self.im + &other.im, kind: self.kind })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(QuadExtElement { re: &self.re - &other.re, im: &self.im - &other.im, kind: self.kind })
    }

    pub fn neg(&self) -> Self {
        QuadExtElement { re: -&self.re, im: -&self.im, kind: self.kind }
    }

    pub fn scale_base(&self, k: &RadicalElement<T>) -> Self {
        QuadExtElement { re: &self.re * k, im: &self.im * k, kind: self.kind }
    }

    /// `(a + bu)(c + du)` with `u² = −1` or `u² = −u − 1`.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let (a, b, c, d) = (&self.re, &self.im, &other.re, &other.im);
        let ac = a * c;
        let bd = b * d;
        let cross = &(a * d) + &(b * c);
        let (re, im) = match self.kind {
            QuadExt::I => (&ac - &bd, cross),
            QuadExt::Eps => (&ac - &bd, &cross - &bd),
        };
        Ok(QuadExtElement { re, im, kind: self.kind })
    }

    /// Complex conjugation: `i ↦ −i`, `ε ↦ ε² = −1 − ε`.
    pub fn conj(&self) -> Self {
        match self.kind {
            QuadExt::I => QuadExtElement { re: self.re.clone(), im: -&self.im, kind: self.kind },
            QuadExt::Eps => QuadExtElement { re: &self.re - &self.im, im: -&self.im, kind: self.kind },
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.re.descriptor(), self.kind), |acc, _| acc.try_mul(self).expect("same ring"))
    }
}

impl<T: Scalar + fmt::Display + PartialOrd> fmt::Display for QuadExtElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = match self.kind {
            QuadExt::I => "i",
            QuadExt::Eps => "ε",
        };
        write!(f, "({}) + ({})·{sym}", self.re, self.im)
    }
}
