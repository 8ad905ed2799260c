//! Depressed cubics `x³ + px + q`: the discriminant test and Cardano's
//! construction of a root in `ℚ[∛w]`.

use num_traits::{Signed, Zero};

use super::certificate::{Certificate, Diagnostics, Outcome, Verdict};
use crate::arith::rational::{q as rat, sqrt_exact};
use crate::arith::roots::rational_roots;
use crate::error::{Error, Result};
use crate::radical::{normalize_radical, RadicalDescriptor, RadicalElement};
use crate::{QPoly, Rational};

pub fn depressed_cubic(p: &Rational, q: &Rational) -> QPoly {
    QPoly::new(vec![q.clone(), p.clone(), Rational::zero(), Rational::from_integer(1.into())])
}

/// `D = (p/3)³ + (q/2)²`.
pub fn cubic_discriminant(p: &Rational, q: &Rational) -> Rational {
    let a = p / rat(3, 1);
    let b = q / rat(2, 1);
    &a * &a * &a + &b * &b
}

/// Decides 1-solvability of `x³ + px + q`: a rational root, or `D ≥ 0` with
/// `√D` rational, or neither.
pub fn decide_cubic(p: &Rational, q: &Rational) -> Result<Verdict> {
    let d = cubic_discriminant(p, q);
    let diagnostics = Diagnostics { d_pq: Some(d.clone()), ..Default::default() };
    let roots = rational_roots(&depressed_cubic(p, q))?;
    if let Some(r) = roots.first() {
        return Ok(Verdict::new(Outcome::RationalRoot(r.clone()), diagnostics));
    }
    if d.is_zero() {
        return Err(Error::Internal("D = 0 forces a rational double root".into()));
    }
    if d.is_negative() {
        return Ok(Verdict::new(
            Outcome::NotOneSolvable(format!("D_pq = {d} < 0: three real roots, none in a one-radical extension")),
            diagnostics,
        ));
    }
    match sqrt_exact(&d) {
        Some(sqrt_d) => {
            let cert = construct_cubic_certificate(p, q, &sqrt_d)?;
            Ok(Verdict::new(Outcome::OneRadical(cert), diagnostics))
        }
        None => Ok(Verdict::new(
            Outcome::NotOneSolvable(format!("D_pq = {d} is not the square of a rational")),
            diagnostics,
        )),
    }
}

/// Cardano: with `w = −q/2 + √D` (or `−q/2 − √D` when that vanishes) and
/// `r = ∛w`, the real root is `r − p/(3r) = r − (p/(3w))·r²`.
pub fn construct_cubic_certificate(p: &Rational, q: &Rational, sqrt_d: &Rational) -> Result<Certificate> {
    if sqrt_d.is_negative() || sqrt_d * sqrt_d != cubic_discriminant(p, q) {
        return Err(Error::Precondition("sqrtD must be the non-negative square root of D_pq".into()));
    }
    let half_q = q / rat(2, 1);
    let mut w = sqrt_d - &half_q;
    if w.is_zero() {
        w = -sqrt_d - &half_q;
    }
    if w.is_zero() {
        return Err(Error::Precondition("p = q = 0: x³ has the rational root 0".into()));
    }
    let (desc, _) = normalize_radical(&RadicalDescriptor::new(3, w.clone())?)?;
    if desc.index() != 3 {
        return Err(Error::Precondition(format!("w = {w} is a rational cube, so a rational root exists")));
    }
    let c = -(p / (rat(3, 1) * &w));
    let cert = Certificate::new(Rational::zero(), RadicalElement::new(desc, vec![Rational::zero(), rat(1, 1), c])?)?;
    if !cert.element().eval_poly(&depressed_cubic(p, q)).is_zero() {
        return Err(Error::Internal("Cardano root failed exact substitution".into()));
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discriminant_examples() {
        assert_eq!(cubic_discriminant(&rat(6, 1), &rat(-2, 1)), rat(9, 1));
        assert_eq!(cubic_discriminant(&rat(0, 1), &rat(0, 1)), rat(0, 1));
        assert_eq!(cubic_discriminant(&rat(-3, 1), &rat(-1, 1)), rat(-3, 4));
    }

    #[test]
    fn decide_examples() {
        let v = decide_cubic(&rat(-1, 1), &rat(0, 1)).unwrap();
        assert_eq!(v.outcome, Outcome::RationalRoot(rat(-1, 1)));

        let v = decide_cubic(&rat(6, 1), &rat(-2, 1)).unwrap();
        let cert = v.certificate().unwrap();
        assert_eq!(cert.descriptor().radicand(), &rat(4, 1));
        assert_eq!(cert.coeffs(), &[rat(0, 1), rat(1, 1), rat(-1, 2)]);

        let v = decide_cubic(&rat(-3, 1), &rat(-1, 1)).unwrap();
        assert!(matches!(v.outcome, Outcome::NotOneSolvable(_)));
        assert_eq!(v.diagnostics.d_pq, Some(rat(-3, 4)));
    }

    #[test]
    fn cardano_examples() {
        let c = construct_cubic_certificate(&rat(6, 1), &rat(-2, 1), &rat(3, 1)).unwrap();
        assert_eq!(c.descriptor().radicand(), &rat(4, 1));

        let c = construct_cubic_certificate(&rat(0, 1), &rat(-2, 1), &rat(1, 1)).unwrap();
        assert_eq!(c.descriptor().radicand(), &rat(2, 1));
        assert_eq!(c.coeffs(), &[rat(0, 1), rat(1, 1), rat(0, 1)]);

        // −q/2 + √D = 0 flips to w = −2
        let c = construct_cubic_certificate(&rat(0, 1), &rat(2, 1), &rat(1, 1)).unwrap();
        assert_eq!(c.descriptor().radicand(), &rat(-2, 1));
        assert_eq!(c.coeffs(), &[rat(0, 1), rat(1, 1), rat(0, 1)]);
    }

    #[test]
    fn cardano_preconditions() {
        assert!(construct_cubic_certificate(&rat(6, 1), &rat(-2, 1), &rat(-3, 1)).is_err());
        assert!(construct_cubic_certificate(&rat(6, 1), &rat(-2, 1), &rat(2, 1)).is_err());
        assert!(construct_cubic_certificate(&rat(0, 1), &rat(0, 1), &rat(0, 1)).is_err());
    }
}
