//! Conjugate roots of a certificate and the identities they satisfy.
//!
//! A cubic root `a + br + cr²` has conjugates obtained by `r ↦ rε, rε²`; a
//! quartic root `a + br + cr² + dr³` has conjugates under `r ↦ −r, ri, −ri`.
//! Everything here is computed exactly in `ℚ[r][ε]` or `ℚ[r][i]`.

use num_traits::Zero;

use crate::arith::rational::q;
use crate::error::{Error, Result};
use crate::radical::{QuadExt, QuadExtElement, RadicalElement};
use crate::solvers::{cubic_discriminant, depress, gamma, Certificate};
use crate::{QPoly, QQuadExt, Rational};

/// The conjugate tuple of the certificate root (shift included).
///
/// Index 3: `(x₀, x₁, x₂)` with `r ↦ r, rε, rε²`. Index 4: `(x₀, x₁, x₂, x₃)`
/// with `r ↦ r, −r, ri, −ri`; requires `(b, d) ≠ (0, 0)`.
pub fn conjugate_roots(cert: &Certificate) -> Result<Vec<QQuadExt>> {
    let desc = cert.descriptor();
    let (kind, zetas) = match desc.index() {
        3 => {
            let eps = QuadExtElement::unit(desc, QuadExt::Eps);
            (QuadExt::Eps, vec![QuadExtElement::one(desc, QuadExt::Eps), eps.clone(), eps.pow(2)])
        }
        4 => {
            if cert.coeff(1).is_zero() && cert.coeff(3).is_zero() {
                return Err(Error::Precondition("b = d = 0: the root lies in ℚ[r²]".into()));
            }
            let one = QuadExtElement::one(desc, QuadExt::I);
            let i = QuadExtElement::unit(desc, QuadExt::I);
            (QuadExt::I, vec![one.clone(), one.neg(), i.clone(), i.neg()])
        }
        n => return Err(Error::Precondition(format!("conjugates need index 3 or 4, got {n}"))),
    };
    let shifted_a = cert.coeff(0) - cert.shift();
    Ok(zetas
        .iter()
        .map(|zeta| {
            let mut acc = QuadExtElement::from_base(RadicalElement::scalar(desc, shifted_a.clone()), kind);
            for k in 1..desc.index() as usize {
                let term = RadicalElement::power_of_generator(desc, k).scale(&cert.coeff(k));
                let term = QuadExtElement::from_base(term, kind).try_mul(&zeta.pow(k as u32)).expect("same ring");
                acc = acc.try_add(&term).expect("same ring");
            }
            acc
        })
        .collect())
}

/// The rational value of an extension element, if it has one.
pub fn as_rational(x: &QQuadExt) -> Option<Rational> {
    if !x.im.is_zero() {
        return None;
    }
    x.re.as_scalar().cloned()
}

fn mul(a: &QQuadExt, b: &QQuadExt) -> QQuadExt {
    a.try_mul(b).expect("same ring")
}

fn sub(a: &QQuadExt, b: &QQuadExt) -> QQuadExt {
    a.try_sub(b).expect("same ring")
}

fn add(a: &QQuadExt, b: &QQuadExt) -> QQuadExt {
    a.try_add(b).expect("same ring")
}

/// `∏ (X − xⱼ)` over the conjugates; fails if a coefficient is not rational.
pub fn conjugate_product(cert: &Certificate) -> Result<QPoly> {
    let roots = conjugate_roots(cert)?;
    let desc = cert.descriptor();
    let kind = roots[0].kind;
    let mut coeffs = vec![QuadExtElement::one(desc, kind)];
    for x in &roots {
        let mut next = vec![QuadExtElement::zero(desc, kind); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] = add(&next[k + 1], c);
            next[k] = sub(&next[k], &mul(c, x));
        }
        coeffs = next;
    }
    let rational: Option<Vec<Rational>> = coeffs.iter().map(as_rational).collect();
    rational.map(QPoly::new).ok_or_else(|| Error::Internal("conjugate product has an irrational coefficient".into()))
}

#[derive(Clone, Debug, PartialEq)]
pub struct CubicIdentityReport {
    pub d_pq: Rational,
    /// `((x₁−x₂)(x₀−x₂)(x₀−x₁))²`, rational.
    pub squared_differences: Rational,
    /// `−27(b³t − c³t²)²`.
    pub closed_form: Rational,
    pub holds: bool,
}

/// Checks `−108·D_pq = ∏(xᵢ − xⱼ)² = −27((br)³ − (cr²)³)²` for a cubic certificate.
pub fn check_cubic_discriminant(cert: &Certificate) -> Result<CubicIdentityReport> {
    if cert.descriptor().index() != 3 {
        return Err(Error::Precondition("cubic certificate required".into()));
    }
    let roots = conjugate_roots(cert)?;
    let poly = conjugate_product(cert)?;
    let dep = depress(&poly)?;
    let d_pq = cubic_discriminant(&dep.poly.coeff(1), &dep.poly.coeff(0));
    let v = mul(&mul(&sub(&roots[1], &roots[2]), &sub(&roots[0], &roots[2])), &sub(&roots[0], &roots[1]));
    let squared_differences =
        as_rational(&mul(&v, &v)).ok_or_else(|| Error::Internal("squared root differences are not rational".into()))?;
    let t = cert.descriptor().radicand();
    let (b, c) = (cert.coeff(1), cert.coeff(2));
    let inner = &b * &b * &b * t - &c * &c * &c * t * t;
    let closed_form = q(-27, 1) * &inner * &inner;
    let holds = q(-108, 1) * &d_pq == squared_differences && squared_differences == closed_form;
    Ok(CubicIdentityReport { d_pq, squared_differences, closed_form, holds })
}

/// Outcome of checking the quartic root identities under the pairing
/// `α = (x₀x₁ + x₂x₃)/2`.
#[derive(Clone, Debug, PartialEq)]
pub struct ResolventIdentityReport {
    pub p: Rational,
    pub q: Rational,
    pub s: Rational,
    pub alpha: Rational,
    pub gamma: Rational,
    /// `4(α² − s) = (x₀x₁ − x₂x₃)²`.
    pub identity_a: bool,
    /// `p − 2α = (x₀ + x₁)(x₂ + x₃)`.
    pub identity_b: bool,
    /// `q² − 4(p − 2α)(s − α²) = 0`.
    pub identity_c: bool,
    /// `4Γ = −(x₀x₁ − x₂x₃)²(x₂ − x₃)²(x₀ − x₁)²`.
    pub identity_d: bool,
    /// All six pairwise differences of the conjugates are nonzero.
    pub distinct: bool,
    /// `br − dr³ ≠ 0` and `br + dr³ ≠ 0`.
    pub nonvanishing: bool,
    /// `Γ = 16t²(b⁴ − d⁴t²)²`.
    pub gamma_closed_form: bool,
    /// `α = c²t − 2bdt`.
    pub alpha_closed_form: bool,
}

impl ResolventIdentityReport {
    pub fn all_hold(&self) -> bool {
        self.identity_a
            && self.identity_b
            && self.identity_c
            && self.identity_d
            && self.distinct
            && self.nonvanishing
            && self.gamma_closed_form
            && self.alpha_closed_form
    }
}

/// Exact check of the quartic conjugate-root identities for a certificate
/// root `br + cr² + dr³` (zero constant term after the shift).
pub fn check_resolvent_identities(cert: &Certificate) -> Result<ResolventIdentityReport> {
    if cert.descriptor().index() != 4 {
        return Err(Error::Precondition("quartic certificate required".into()));
    }
    if !(cert.coeff(0) - cert.shift()).is_zero() {
        return Err(Error::Precondition("root must have zero constant term (depressed quartic)".into()));
    }
    let x = conjugate_roots(cert)?;
    let poly = conjugate_product(cert)?;
    let (p, qc, s) = (poly.coeff(2), poly.coeff(1), poly.coeff(0));

    let p01 = mul(&x[0], &x[1]);
    let p23 = mul(&x[2], &x[3]);
    let alpha =
        as_rational(&add(&p01, &p23)).ok_or_else(|| Error::Internal("x₀x₁ + x₂x₃ is not rational".into()))? / q(2, 1);
    let gamma_v = gamma(&alpha, &p, &s);
    let two = q(2, 1);
    let four = q(4, 1);

    let diff = sub(&p01, &p23);
    let diff2 = mul(&diff, &diff);
    let identity_a = as_rational(&diff2) == Some(&four * (&alpha * &alpha - &s));

    let prod_sums = mul(&add(&x[0], &x[1]), &add(&x[2], &x[3]));
    let identity_b = as_rational(&prod_sums) == Some(&p - &two * &alpha);

    let identity_c = (&qc * &qc - &four * (&p - &two * &alpha) * (&s - &alpha * &alpha)).is_zero();

    let d23 = sub(&x[2], &x[3]);
    let d01 = sub(&x[0], &x[1]);
    let rhs = mul(&mul(&diff2, &mul(&d23, &d23)), &mul(&d01, &d01)).neg();
    let identity_d = as_rational(&rhs) == Some(&four * &gamma_v);

    let distinct = (0..4).all(|i| (i + 1..4).all(|j| !sub(&x[i], &x[j]).is_zero()));

    let desc = cert.descriptor();
    let br = RadicalElement::generator(desc).scale(&cert.coeff(1));
    let dr3 = RadicalElement::power_of_generator(desc, 3).scale(&cert.coeff(3));
    let nonvanishing = !(&br - &dr3).is_zero() && !(&br + &dr3).is_zero();

    let t = desc.radicand();
    let (b, c, d) = (cert.coeff(1), cert.coeff(2), cert.coeff(3));
    let b4 = &b * &b * &b * &b;
    let d4t2 = &d * &d * &d * &d * t * t;
    let inner = &b4 - &d4t2;
    let gamma_closed_form = gamma_v == q(16, 1) * t * t * &inner * &inner;
    let alpha_closed_form = alpha == &c * &c * t - &two * &b * &d * t;

    Ok(ResolventIdentityReport {
        p,
        q: qc,
        s,
        alpha,
        gamma: gamma_v,
        identity_a,
        identity_b,
        identity_c,
        identity_d,
        distinct,
        nonvanishing,
        gamma_closed_form,
        alpha_closed_form,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radical::RadicalDescriptor;

    fn cert(n: u32, t: i64, coeffs: &[Rational]) -> Certificate {
        let d = RadicalDescriptor::normalized(n, q(t, 1)).unwrap();
        Certificate::from_parts(q(0, 1), d, coeffs.to_vec()).unwrap()
    }

    #[test]
    fn cubic_conjugates_of_cube_root() {
        let c = cert(3, 2, &[q(0, 1), q(1, 1), q(0, 1)]);
        let xs = conjugate_roots(&c).unwrap();
        let d = c.descriptor();
        let r = QuadExtElement::from_base(RadicalElement::generator(d), QuadExt::Eps);
        let eps = QuadExtElement::unit(d, QuadExt::Eps);
        assert_eq!(xs[0], r);
        assert_eq!(xs[1], r.try_mul(&eps).unwrap());
        assert_eq!(xs[2], r.try_mul(&eps.pow(2)).unwrap());
        assert_eq!(conjugate_product(&c).unwrap(), QPoly::new(vec![q(-2, 1), q(0, 1), q(0, 1), q(1, 1)]));
    }

    #[test]
    fn quartic_conjugates_specialized() {
        let c = cert(4, 2, &[q(0, 1), q(1, 1), q(1, 1), q(0, 1)]);
        let xs = conjugate_roots(&c).unwrap();
        let d = c.descriptor();
        let re = |v: &[i64]| RadicalElement::new(d.clone(), v.iter().map(|&k| q(k, 1)).collect()).unwrap();
        let el = |a: &[i64], b: &[i64]| QuadExtElement::new(re(a), re(b), QuadExt::I).unwrap();
        assert_eq!(xs[0], el(&[0, 1, 1, 0], &[0]));
        assert_eq!(xs[1], el(&[0, -1, 1, 0], &[0]));
        assert_eq!(xs[2], el(&[0, 0, -1, 0], &[0, 1]));
        assert_eq!(xs[3], el(&[0, 0, -1, 0], &[0, -1]));
    }

    #[test]
    fn degenerate_quartic_rejected() {
        let c = cert(4, 2, &[q(0, 1), q(0, 1), q(1, 1), q(0, 1)]);
        assert!(conjugate_roots(&c).is_err());
        assert!(check_resolvent_identities(&c).is_err());
        let c5 = cert(5, 2, &[q(0, 1), q(1, 1)]);
        assert!(conjugate_roots(&c5).is_err());
    }

    #[test]
    fn resolvent_identity_example() {
        let c = cert(4, 2, &[q(0, 1), q(1, 1), q(1, 1), q(0, 1)]);
        let rep = check_resolvent_identities(&c).unwrap();
        assert_eq!(rep.alpha, q(2, 1));
        assert_eq!(rep.gamma, q(64, 1));
        assert_eq!((rep.p.clone(), rep.q.clone(), rep.s.clone()), (q(-4, 1), q(-8, 1), q(2, 1)));
        assert!(rep.all_hold(), "{rep:?}");
    }

    #[test]
    fn cubic_identity_example() {
        let c = cert(3, 4, &[q(0, 1), q(1, 1), q(-1, 2)]);
        let rep = check_cubic_discriminant(&c).unwrap();
        assert_eq!(rep.d_pq, q(9, 1));
        assert!(rep.holds, "{rep:?}");
    }
}
