//! Decision procedures for 1-solvability of polynomials of degree at most 4.

pub mod certificate;
pub mod cubic;
pub mod depress;
pub mod quadratic;
pub mod quartic;

pub use certificate::{Certificate, CertificateWire, Diagnostics, GammaEntry, Outcome, Verdict};
pub use cubic::{construct_cubic_certificate, cubic_discriminant, decide_cubic};
pub use depress::{depress, Depressed};
pub use quadratic::{decide_quadratic, QuadFactor};
pub use quartic::{
    construct_quartic_certificate, decide_biquadratic, decide_quartic, decide_reducible_quartic, gamma,
    quartic_irreducible, quartic_resolvent_roots, QuarticFactorization,
};

use crate::error::{Error, Result};
use crate::verify::verify_certificate;
use crate::{QPoly, Rational};

/// Full pipeline for an arbitrary nonzero polynomial of degree ≤ 4: depress,
/// dispatch on degree, move the answer back to the original variable, and
/// re-verify any certificate against the original polynomial.
pub fn decide_polynomial(f: &QPoly) -> Result<Verdict> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    match n {
        0 => Ok(Verdict::new(Outcome::NotOneSolvable("nonzero constant has no roots".into()), Diagnostics::default())),
        1 => {
            let root = -f.coeff(0) / f.coeff(1);
            Ok(Verdict::new(Outcome::RationalRoot(root), Diagnostics::default()))
        }
        2 => {
            let monic = f.monic();
            let v = decide_quadratic(&QuadFactor::new(monic.coeff(1), monic.coeff(0)))?;
            check_certificate(f, &v, None)?;
            Ok(v)
        }
        3 | 4 => {
            let d = depress(f)?;
            let v = if n == 3 {
                decide_cubic(&d.poly.coeff(1), &d.poly.coeff(0))?
            } else {
                decide_quartic(&d.poly.coeff(2), &d.poly.coeff(1), &d.poly.coeff(0))?
            };
            let v = unshift(v, &d.shift)?;
            check_certificate(f, &v, Some(n))?;
            Ok(v)
        }
        _ => Err(Error::UnsupportedDegree(n)),
    }
}

fn unshift(v: Verdict, shift: &Rational) -> Result<Verdict> {
    let outcome = match v.outcome {
        Outcome::RationalRoot(r) => Outcome::RationalRoot(r - shift),
        Outcome::OneRadical(c) => Outcome::OneRadical(Certificate::new(c.shift() + shift, c.radical_part().clone())?),
        other => other,
    };
    Ok(Verdict::new(outcome, v.diagnostics))
}

/// Exact re-verification, plus the degree check: a certificate for an
/// irreducible input of degree m uses a radical of normalized index m.
fn check_certificate(f: &QPoly, v: &Verdict, irreducible_degree: Option<usize>) -> Result<()> {
    let Some(cert) = v.certificate() else { return Ok(()) };
    if !verify_certificate(f, cert)? {
        return Err(Error::Internal("certificate failed verification on the original polynomial".into()));
    }
    if let Some(m) = irreducible_degree {
        // cubic OneRadical implies no rational root; quartic OneRadical from
        // the resolvent or biquadratic path implies irreducibility
        let from_quadratic_factor = v.diagnostics.quadratic_discriminant.is_some();
        if !from_quadratic_factor && cert.descriptor().index() as usize != m {
            return Err(Error::Internal(format!(
                "radical index {} differs from degree {m} of an irreducible input",
                cert.descriptor().index()
            )));
        }
    }
    Ok(())
}
