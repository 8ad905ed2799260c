//! Monic quadratics `x² + ux + v`, used directly for degree-2 input and for
//! the factors of reducible quartics.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::certificate::{Certificate, Diagnostics, Outcome, Verdict};
use crate::arith::factor::factor_integer;
use crate::arith::rational::{q as rat, sqrt_exact};
use crate::error::{Error, Result};
use crate::radical::{RadicalDescriptor, RadicalElement};
use crate::{QPoly, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadFactor {
    pub u: Rational,
    pub v: Rational,
}

impl QuadFactor {
    pub fn new(u: Rational, v: Rational) -> Self {
        QuadFactor { u, v }
    }

    pub fn poly(&self) -> QPoly {
        QPoly::new(vec![self.v.clone(), self.u.clone(), Rational::one()])
    }

    pub fn discriminant(&self) -> Rational {
        &self.u * &self.u - rat(4, 1) * &self.v
    }

    /// Rational roots, ascending.
    pub fn rational_roots(&self) -> Vec<Rational> {
        let d = self.discriminant();
        match sqrt_exact(&d) {
            None => Vec::new(),
            Some(s) if s.is_zero() => vec![-&self.u / rat(2, 1)],
            Some(s) => vec![(-&self.u - &s) / rat(2, 1), (-&self.u + &s) / rat(2, 1)],
        }
    }
}

/// Writes `Δ = m²·Δ′` with `Δ′` a squarefree integer. Falls back to
/// `(1, Δ)` when the factorization bound is exceeded.
fn extract_square(delta: &Rational) -> (Rational, Rational) {
    let (Ok(num), Ok(den)) = (factor_integer(delta.numer()), factor_integer(delta.denom())) else {
        return (Rational::one(), delta.clone());
    };
    let mut m_num = BigInt::one();
    let mut m_den = BigInt::one();
    let mut rest = BigInt::from(num.sign);
    for (p, e) in &num.factors {
        m_num *= num_traits::pow(p.clone(), (*e / 2) as usize);
        if e % 2 == 1 {
            rest *= p;
        }
    }
    for (p, e) in &den.factors {
        // 1/p^e = p^(e mod 2) / p^(e + e mod 2)
        m_den *= num_traits::pow(p.clone(), e.div_ceil(2) as usize);
        if e % 2 == 1 {
            rest *= p;
        }
    }
    (Rational::new(m_num, m_den), Rational::from_integer(rest))
}

/// Certificate for the larger root `(−u + √Δ)/2` of an irrational quadratic
/// with `Δ > 0`.
pub fn quadratic_certificate(f: &QuadFactor) -> Result<Certificate> {
    let delta = f.discriminant();
    if !delta.is_positive() || sqrt_exact(&delta).is_some() {
        return Err(Error::Precondition(format!("discriminant {delta} must be positive and not a rational square")));
    }
    let (m, rest) = extract_square(&delta);
    let desc = RadicalDescriptor::normalized(2, rest)?;
    let half = rat(1, 2);
    let root = RadicalElement::new(desc, vec![-&f.u * &half, m * &half])?;
    let cert = Certificate::new(Rational::zero(), root)?;
    if !cert.element().eval_poly(&f.poly()).is_zero() {
        return Err(Error::Internal("quadratic root failed exact substitution".into()));
    }
    Ok(cert)
}

pub fn decide_quadratic(f: &QuadFactor) -> Result<Verdict> {
    let delta = f.discriminant();
    let diagnostics = Diagnostics { quadratic_discriminant: Some(delta.clone()), ..Default::default() };
    if delta.is_negative() {
        return Ok(Verdict::new(
            Outcome::NotOneSolvable(format!("discriminant {delta} < 0: no real roots")),
            diagnostics,
        ));
    }
    if let Some(r) = f.rational_roots().into_iter().next() {
        return Ok(Verdict::new(Outcome::RationalRoot(r), diagnostics));
    }
    Ok(Verdict::new(Outcome::OneRadical(quadratic_certificate(f)?), diagnostics))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_extraction() {
        assert_eq!(extract_square(&rat(8, 1)), (rat(2, 1), rat(2, 1)));
        assert_eq!(extract_square(&rat(3, 4)), (rat(1, 2), rat(3, 1)));
        assert_eq!(extract_square(&rat(1, 2)), (rat(1, 2), rat(2, 1)));
        assert_eq!(extract_square(&rat(-12, 1)), (rat(2, 1), rat(-3, 1)));
    }

    #[test]
    fn sqrt_two() {
        let c = quadratic_certificate(&QuadFactor::new(rat(0, 1), rat(-2, 1))).unwrap();
        assert_eq!(c.descriptor().index(), 2);
        assert_eq!(c.descriptor().radicand(), &rat(2, 1));
        assert_eq!(c.coeffs(), &[rat(0, 1), rat(1, 1)]);
    }

    #[test]
    fn verdicts() {
        let v = decide_quadratic(&QuadFactor::new(rat(0, 1), rat(1, 1))).unwrap();
        assert!(matches!(v.outcome, Outcome::NotOneSolvable(_)));
        let v = decide_quadratic(&QuadFactor::new(rat(-5, 1), rat(6, 1))).unwrap();
        assert_eq!(v.outcome, Outcome::RationalRoot(rat(2, 1)));
        let v = decide_quadratic(&QuadFactor::new(rat(1, 1), rat(-1, 1))).unwrap();
        assert_eq!(v.certificate().unwrap().descriptor().radicand(), &rat(5, 1));
    }
}
