//! Elements of `ℚ[x]/(xⁿ − t)` on the power basis `{1, r, …, r^{n−1}}`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer as _;
use num_traits::Zero;

use super::descriptor::{ExponentMap, RadicalDescriptor};
use super::matrix::Matrix;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::Poly;

#[derive(Clone, Debug, PartialEq)]
pub struct RadicalElement<T> {
    desc: RadicalDescriptor<T>,
    coeffs: Vec<T>,
}

impl<T: Scalar> RadicalElement<T> {
    /// `c₀ + c₁r + …`; short vectors are zero-padded, longer ones rejected.
    pub fn new(desc: RadicalDescriptor<T>, mut coeffs: Vec<T>) -> Result<Self> {
        let n = desc.index() as usize;
        if coeffs.len() > n {
            return Err(Error::Domain(format!("{} coefficients for a radical of index {n}", coeffs.len())));
        }
        coeffs.resize(n, T::zero());
        Ok(RadicalElement { desc, coeffs })
    }

    pub fn zero(desc: &RadicalDescriptor<T>) -> Self {
        Self::scalar(desc, T::zero())
    }

    pub fn one(desc: &RadicalDescriptor<T>) -> Self {
        Self::scalar(desc, T::one())
    }

    pub fn scalar(desc: &RadicalDescriptor<T>, c: T) -> Self {
        let mut coeffs = vec![T::zero(); desc.index() as usize];
        coeffs[0] = c;
        RadicalElement { desc: desc.clone(), coeffs }
    }

    /// The radical `r` itself.
    pub fn generator(desc: &RadicalDescriptor<T>) -> Self {
        Self::power_of_generator(desc, 1)
    }

    /// `r^k`, reduced.
    pub fn power_of_generator(desc: &RadicalDescriptor<T>, k: usize) -> Self {
        let n = desc.index() as usize;
        let mut factor = T::one();
        for _ in 0..k / n {
            factor = factor * desc.radicand().clone();
        }
        let mut coeffs = vec![T::zero(); n];
        coeffs[k % n] = factor;
        RadicalElement { desc: desc.clone(), coeffs }
    }

    pub fn descriptor(&self) -> &RadicalDescriptor<T> {
        &self.desc
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &T {
        &self.coeffs[k]
    }

    /// Coefficient-wise zero test. Equivalent to the element being zero only
    /// for a normalized descriptor.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The element lies in the base field: all non-constant coefficients vanish.
    pub fn as_scalar(&self) -> Option<&T> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| &self.coeffs[0])
    }

    /// Representative polynomial `c₀ + c₁x + …`.
    pub fn to_poly(&self) -> Poly<T> {
        Poly::new(self.coeffs.clone())
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.desc == other.desc {
            Ok(())
        } else {
            Err(Error::DescriptorMismatch(format!("index {} vs {}", self.desc.index(), other.desc.index())))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.zip(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.zip(other, |a, b| a - b))
    }

    fn zip(&self, other: &Self, f: impl Fn(T, T) -> T) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a.clone(), b.clone())).collect();
        RadicalElement { desc: self.desc.clone(), coeffs }
    }

    /// Product, reduced with `r^{n+k} = t·r^k`.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let n = self.coeffs.len();
        let mut wide = vec![T::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                wide[i + j] = wide[i + j].clone() + a.clone() * b.clone();
            }
        }
        let t = self.desc.radicand().clone();
        for k in (n..wide.len()).rev() {
            let hi = std::mem::replace(&mut wide[k], T::zero());
            wide[k - n] = wide[k - n].clone() + hi * t.clone();
        }
        wide.truncate(n);
        Ok(RadicalElement { desc: self.desc.clone(), coeffs: wide })
    }

    pub fn scale(&self, k: &T) -> Self {
        RadicalElement { desc: self.desc.clone(), coeffs: self.coeffs.iter().map(|c| c.clone() * k.clone()).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(&self.desc), |acc, _| &acc * self)
    }

    /// Multiplicative inverse via the extended gcd of the representative with
    /// `xⁿ − t`. Requires a normalized descriptor, where `ℚ[r]` is a field.
    pub fn inverse(&self) -> Result<Self>
    where
        T: fmt::Display,
    {
        self.desc.require_normalized()?;
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.desc.index() as usize;
        let modulus = &Poly::monomial(T::one(), n) - &Poly::constant(self.desc.radicand().clone());
        let (g, u, _) = self.to_poly().xgcd(&modulus);
        if g != Poly::one() {
            return Err(Error::Internal(format!("element shares a factor of degree {:?} with xⁿ − t", g.degree())));
        }
        let (_, rem) = u.divmod(&modulus)?;
        RadicalElement::new(self.desc.clone(), rem.into_coeffs())
    }

    /// Horner evaluation of `f` at this element.
    pub fn eval_poly(&self, f: &Poly<T>) -> Self {
        f.coeffs().iter().rev().fold(Self::zero(&self.desc), |acc, c| {
            let mut next = &acc * self;
            next.coeffs[0] = next.coeffs[0].clone() + c.clone();
            next
        })
    }

    /// Matrix of multiplication by `self` on the power basis; column `j` holds
    /// the coordinates of `self·r^j`.
    pub fn mul_matrix(&self) -> Matrix<T> {
        let n = self.desc.index() as usize;
        let cols = (0..n).map(|j| (self * &Self::power_of_generator(&self.desc, j)).coeffs).collect();
        Matrix::from_columns(cols)
    }

    /// Monic minimal polynomial over the base field: the first power `x^k`
    /// linearly dependent on `1, x, …, x^{k−1}`.
    pub fn min_poly(&self) -> Result<Poly<T>>
    where
        T: fmt::Display,
    {
        self.desc.require_normalized()?;
        let n = self.desc.index() as usize;
        let mut powers = vec![Self::one(&self.desc).coeffs];
        for k in 1..=n {
            let next = RadicalElement { desc: self.desc.clone(), coeffs: powers[k - 1].clone() };
            powers.push((&next * self).coeffs);
            let m = Matrix::from_columns(powers.clone());
            if let Some(v) = m.kernel().into_iter().next() {
                let lead = v[k].clone();
                return Ok(Poly::new(v.into_iter().map(|c| c / lead.clone()).collect()));
            }
        }
        Err(Error::Internal("no linear dependency among n+1 powers".into()))
    }

    /// Finds the largest `k | n` with `self ∈ ℚ[r^k]` and the polynomial `b₀`
    /// with `self = b₀(r^k)`, then checks `ℚ[self] = ℚ[r^k]` by degree.
    pub fn subfield_reduce(&self) -> Result<SubfieldReduction<T>>
    where
        T: fmt::Display,
    {
        self.desc.require_normalized()?;
        let n = self.desc.index() as usize;
        let k = self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).fold(n, |g, (j, _)| g.gcd(&j));
        let b0 = Poly::new(self.coeffs.iter().step_by(k).cloned().collect());
        let degree = self.min_poly()?.degree().expect("minimal polynomial is nonzero");
        if degree * k != n {
            return Err(Error::Internal(format!("subfield degree mismatch: deg {degree} · k {k} ≠ n {n}")));
        }
        Ok(SubfieldReduction { k: k as u32, b0, min_poly_degree: degree })
    }
}

impl RadicalElement<crate::Rational> {
    /// Re-expresses an element over the normalized descriptor produced by
    /// [`normalize_radical`](super::normalize_radical).
    pub fn rewrite(&self, target: &RadicalDescriptor<crate::Rational>, map: &ExponentMap) -> Result<Self> {
        if map.len() != self.coeffs.len() {
            return Err(Error::DescriptorMismatch("exponent map length differs".into()));
        }
        let mut coeffs = vec![crate::Rational::zero(); target.index() as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            let (f, e) = map.image(j);
            coeffs[*e as usize] += c * f;
        }
        Self::new(target.clone(), coeffs)
    }
}

/// Result of [`RadicalElement::subfield_reduce`].
#[derive(Clone, Debug, PartialEq)]
pub struct SubfieldReduction<T> {
    pub k: u32,
    pub b0: Poly<T>,
    pub min_poly_degree: usize,
}

impl<T: Scalar> Add for &RadicalElement<T> {
    type Output = RadicalElement<T>;
    /// Panics on a descriptor mismatch; see [`RadicalElement::try_add`].
    fn add(self, rhs: Self) -> RadicalElement<T> {
        self.try_add(rhs).expect("radical descriptor mismatch")
    }
}

impl<T: Scalar> Sub for &RadicalElement<T> {
    type Output = RadicalElement<T>;
    fn sub(self, rhs: Self) -> RadicalElement<T> {
        self.try_sub(rhs).expect("radical descriptor mismatch")
    }
}

impl<T: Scalar> Mul for &RadicalElement<T> {
    type Output = RadicalElement<T>;
    fn mul(self, rhs: Self) -> RadicalElement<T> {
        self.try_mul(rhs).expect("radical descriptor mismatch")
    }
}

impl<T: Scalar> Neg for &RadicalElement<T> {
    type Output = RadicalElement<T>;
    fn neg(self) -> RadicalElement<T> {
        RadicalElement { desc: self.desc.clone(), coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

/// Ascending powers of `r`, e.g. `r - 1/2r^2`.
impl<T: Scalar + fmt::Display + PartialOrd> fmt::Display for RadicalElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::arith::poly::write_terms(f, self.coeffs.iter().enumerate(), "r")
    }
}
