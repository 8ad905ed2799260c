//! Depressed quartics `x⁴ + px² + qx + s`: rational factorization, the
//! resolvent test on `Γ`, Ferrari's construction of roots in `ℚ[r]` with
//! `r⁴ ∈ ℚ`, and the biquadratic case.

use num_traits::{One, Signed, Zero};

use super::certificate::{Certificate, Diagnostics, GammaEntry, Outcome, Verdict};
use super::quadratic::{quadratic_certificate, QuadFactor};
use crate::arith::rational::{q as rat, sqrt_exact};
use crate::arith::roots::rational_roots;
use crate::error::{Error, Result};
use crate::radical::{normalize_radical, RadicalDescriptor, RadicalElement};
use crate::{QPoly, Rational};

pub fn depressed_quartic(p: &Rational, q: &Rational, s: &Rational) -> QPoly {
    QPoly::new(vec![s.clone(), q.clone(), p.clone(), Rational::zero(), Rational::one()])
}

/// Rational `α` with `q² − 4(p − 2α)(s − α²) = 0`, ascending. The condition
/// expands to `−8α³ + 4pα² + 8sα + (q² − 4ps)`.
pub fn quartic_resolvent_roots(p: &Rational, q: &Rational, s: &Rational) -> Result<Vec<Rational>> {
    let resolvent = QPoly::new(vec![q * q - rat(4, 1) * p * s, rat(8, 1) * s, rat(4, 1) * p, rat(-8, 1)]);
    rational_roots(&resolvent)
}

/// `Γ = 16(α² − s)² − (α² − s)(2α + p)²`.
pub fn gamma(alpha: &Rational, p: &Rational, s: &Rational) -> Rational {
    let m = alpha * alpha - s;
    let k = rat(2, 1) * alpha + p;
    rat(16, 1) * &m * &m - &m * &k * &k
}

/// Rational factorization of a depressed quartic.
#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum QuarticFactorization {
    Irreducible,
    /// Product of two monic rational quadratics.
    Quadratics(QuadFactor, QuadFactor),
    /// Has rational roots but no split into rational quadratics.
    Linear {
        roots: Vec<Rational>,
    },
}

/// Irreducibility over ℚ. A split `(x² + ax + b)(x² − ax + c)` needs `a²`
/// to be a root `z` of `z³ + 2pz² + (p² − 4s)z − q²`; each rational `z ≥ 0`
/// that is a rational square is tried (for `z = 0`, `b` and `c` are the
/// roots of `y² − py + s`). Without a quadratic split, a rational root still
/// makes the quartic reducible.
pub fn quartic_irreducible(p: &Rational, q: &Rational, s: &Rational) -> Result<QuarticFactorization> {
    let cubic = QPoly::new(vec![-(q * q), p * p - rat(4, 1) * s, rat(2, 1) * p, Rational::one()]);
    let half = rat(1, 2);
    for z in rational_roots(&cubic)? {
        if z.is_negative() {
            continue;
        }
        let Some(a) = sqrt_exact(&z) else { continue };
        let (b, c) = if a.is_zero() {
            let split = QuadFactor::new(-p, s.clone()).rational_roots();
            match split.as_slice() {
                [b, c] => (b.clone(), c.clone()),
                [b] => (b.clone(), b.clone()),
                _ => continue,
            }
        } else {
            let sum = p + &z;
            let diff = q / &a;
            ((&sum - &diff) * &half, (&sum + &diff) * &half)
        };
        if &b * &c != *s {
            continue;
        }
        let f1 = QuadFactor::new(a.clone(), b);
        let f2 = QuadFactor::new(-a, c);
        debug_assert_eq!(&f1.poly() * &f2.poly(), depressed_quartic(p, q, s));
        let (f1, f2) = if (&f1.u, &f1.v) <= (&f2.u, &f2.v) { (f1, f2) } else { (f2, f1) };
        return Ok(QuarticFactorization::Quadratics(f1, f2));
    }
    let roots = rational_roots(&depressed_quartic(p, q, s))?;
    if roots.is_empty() {
        Ok(QuarticFactorization::Irreducible)
    } else {
        Ok(QuarticFactorization::Linear { roots })
    }
}

fn resolvent_diagnostics(p: &Rational, q: &Rational, s: &Rational) -> Result<Diagnostics> {
    let alphas = quartic_resolvent_roots(p, q, s)?;
    let gammas = alphas
        .iter()
        .map(|a| GammaEntry { alpha: a.clone(), gamma: gamma(a, p, s), admissible: rat(2, 1) * a > *p })
        .collect();
    Ok(Diagnostics { resolvent_roots: alphas, gammas, ..Default::default() })
}

/// Decides 1-solvability of `x⁴ + px² + qx + s`.
///
/// Reducible quartics are decided factor by factor, `q = 0` goes to
/// [`decide_biquadratic`], and otherwise the first admissible resolvent root
/// (ascending, `2α > p`) with `Γ` a rational square yields a certificate.
pub fn decide_quartic(p: &Rational, q: &Rational, s: &Rational) -> Result<Verdict> {
    let mut diagnostics = resolvent_diagnostics(p, q, s)?;
    let factors = quartic_irreducible(p, q, s)?;
    if factors != QuarticFactorization::Irreducible {
        let mut v = decide_reducible_quartic(&depressed_quartic(p, q, s), &factors)?;
        v.diagnostics.resolvent_roots = diagnostics.resolvent_roots;
        v.diagnostics.gammas = diagnostics.gammas;
        return Ok(v);
    }
    if q.is_zero() {
        let mut v = decide_biquadratic(p, s)?;
        v.diagnostics.resolvent_roots = diagnostics.resolvent_roots;
        v.diagnostics.gammas = diagnostics.gammas;
        return Ok(v);
    }
    for entry in diagnostics.gammas.iter().filter(|e| e.admissible) {
        if entry.gamma.is_negative() {
            continue;
        }
        if let Some(sqrt_gamma) = sqrt_exact(&entry.gamma) {
            let certs = construct_quartic_certificate(p, q, s, &entry.alpha, &sqrt_gamma)?;
            diagnostics.alpha = Some(entry.alpha.clone());
            let cert = certs.into_iter().next().expect("at least one verified root");
            return Ok(Verdict::new(Outcome::OneRadical(cert), diagnostics));
        }
    }
    let reason = if diagnostics.gammas.iter().any(|e| e.admissible) {
        "no admissible resolvent root has Γ equal to a rational square"
    } else {
        "no rational resolvent root α with 2α > p"
    };
    Ok(Verdict::new(Outcome::NotOneSolvable(reason.into()), diagnostics))
}

/// Ferrari's construction. With `S = √(α² − s)` and `M = √(2α − p)`,
///
/// `x⁴ + px² + qx + s = (x² + α)² − (Mx + σS)²`,   `q = −2σMS`,
///
/// and the real roots come from the factor whose discriminant is
/// `Δ = −2α − p + 4S`. Taking `r` real with `r⁴ = (32(α² − s) + 8√Γ − (2α + p)²)/4`
/// puts everything in `ℚ[r]`:
///
/// * `4S = r² + (2α + p)²/(4r²)`,
/// * `M = |q|/(2S)`,
/// * `√Δ = ±(r − (2α + p)/(2r))`.
///
/// All four candidates `(±M ± √Δ)/2` are substituted exactly and every one
/// that vanishes is returned, in the order `(+,+), (+,−), (−,+), (−,−)`.
pub fn construct_quartic_certificate(
    p: &Rational,
    q: &Rational,
    s: &Rational,
    alpha: &Rational,
    sqrt_gamma: &Rational,
) -> Result<Vec<Certificate>> {
    let two = rat(2, 1);
    if q.is_zero() {
        return Err(Error::Precondition("q = 0 is the biquadratic case".into()));
    }
    if &two * alpha <= *p {
        return Err(Error::Precondition(format!("2α = {} must exceed p = {p}", &two * alpha)));
    }
    if sqrt_gamma.is_negative() || sqrt_gamma * sqrt_gamma != gamma(alpha, p, s) {
        return Err(Error::Precondition("sqrtΓ must be the non-negative square root of Γ".into()));
    }
    let resolvent = q * q - rat(4, 1) * (p - &two * alpha) * (s - alpha * alpha);
    if !resolvent.is_zero() {
        return Err(Error::Precondition(format!("α = {alpha} is not a resolvent root")));
    }
    let m2 = alpha * alpha - s;
    if !m2.is_positive() {
        return Err(Error::Internal("α² − s must be positive when q ≠ 0".into()));
    }
    let k = &two * alpha + p;
    let k2 = &k * &k;
    let r4 = (rat(32, 1) * &m2 + rat(8, 1) * sqrt_gamma - &k2) / rat(4, 1);
    if !r4.is_positive() {
        return Err(Error::Internal(format!("r⁴ = {r4} must be positive")));
    }
    let raw = RadicalDescriptor::new(4, r4.clone())?;
    let r = RadicalElement::generator(&raw);
    let r2 = RadicalElement::power_of_generator(&raw, 2);
    let r3 = RadicalElement::power_of_generator(&raw, 3);

    // S = r²/4 + (2α+p)²·r²/(16·r⁴)
    let s_coeff = rat(1, 4) + &k2 / (rat(16, 1) * &r4);
    let big_s = r2.scale(&s_coeff);
    // M = |q| / (2S) = |q|·r² / (2·s_coeff·r⁴)
    let big_m = r2.scale(&(q.abs() / (&two * &s_coeff * &r4)));
    // √Δ = r − (2α+p)·r³/(2r⁴)
    let root_delta = &r - &r3.scale(&(&k / (&two * &r4)));
    debug_assert!({
        let delta = &RadicalElement::scalar(&raw, -(&two * alpha) - p) + &big_s.scale(&rat(4, 1));
        &root_delta * &root_delta == delta
    });

    let (desc, map) = normalize_radical(&raw)?;
    let f = depressed_quartic(p, q, s);
    let half = rat(1, 2);
    let mut certs = Vec::new();
    for (sm, sd) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
        let cand = &big_m.scale(&rat(sm, 1)) + &root_delta.scale(&rat(sd, 1));
        let cand = cand.scale(&half).rewrite(&desc, &map)?;
        if cand.eval_poly(&f).is_zero() {
            certs.push(Certificate::new(Rational::zero(), cand)?);
        }
    }
    if certs.is_empty() {
        return Err(Error::Internal("Ferrari identity violated: no sign choice is a root".into()));
    }
    Ok(certs)
}

/// Partial decider for irreducible `x⁴ + px² + s`.
pub fn decide_biquadratic(p: &Rational, s: &Rational) -> Result<Verdict> {
    let zero = Rational::zero();
    if quartic_irreducible(p, &zero, s)? != QuarticFactorization::Irreducible {
        return Err(Error::Precondition("biquadratic input must be irreducible".into()));
    }
    let diagnostics = Diagnostics::default();
    let disc = p * p - rat(4, 1) * s;
    let has_real_root = !disc.is_negative() && (p.is_negative() || s.is_negative());
    if !has_real_root {
        return Ok(Verdict::new(
            Outcome::NotOneSolvable("no real roots".into()),
            Diagnostics { quadratic_discriminant: Some(disc), ..diagnostics },
        ));
    }
    if p.is_zero() && s.is_negative() {
        let desc = RadicalDescriptor::normalized(4, -s)?;
        let root = RadicalElement::generator(&desc);
        let cert = Certificate::new(Rational::zero(), root)?;
        return Ok(Verdict::new(Outcome::OneRadical(cert), diagnostics));
    }
    if let Some(cert) = biquadratic_certificate(p, s)? {
        return Ok(Verdict::new(Outcome::OneRadical(cert), diagnostics));
    }
    Ok(Verdict::new(
        Outcome::Unknown("biquadratic case not covered by the resolvent criterion (requires q ≠ 0)".into()),
        diagnostics,
    ))
}

/// Explicit root of an irreducible `x⁴ + px² + s` in `ℚ[r]`, found when
/// `s < 0` and `−sD` is a rational square (`D = p² − 4s`).
///
/// With `θ = (−p + √D)/2` and `γ = θ√D`, the norm of `γ` is `−sD = n²`, and
/// `(γ + n)² = γ·k` for `k = D + 2n`. Taking `r⁴ = k²D`, so `r² = k√D`, gives
/// the root `x = (γ + n)/r`. Returns `None` when the construction does not
/// apply; that is not a negative verdict.
fn biquadratic_certificate(p: &Rational, s: &Rational) -> Result<Option<Certificate>> {
    if !s.is_negative() {
        return Ok(None);
    }
    let d = p * p - rat(4, 1) * s;
    let Some(n0) = sqrt_exact(&(-s * &d)) else { return Ok(None) };
    let half = rat(1, 2);
    for n in [n0.clone(), -n0] {
        let k = &d + rat(2, 1) * &n;
        if !k.is_positive() {
            continue;
        }
        let t = &k * &k * &d;
        // x = (−p/(2k))·r + ((D/2 + n)/t)·r³
        let mut coeffs = vec![Rational::zero(), -p / (rat(2, 1) * &k), Rational::zero(), (&d * &half + &n) / &t];
        let (t, scale) = integral_radicand(&t);
        for (j, c) in coeffs.iter_mut().enumerate() {
            *c = &*c * scale.pow(j as i32);
        }
        let desc = RadicalDescriptor::normalized(4, t)?;
        let cert = Certificate::from_parts(Rational::zero(), desc, coeffs)?;
        if !cert.radical_part().eval_poly(&depressed_quartic(p, &Rational::zero(), s)).is_zero() {
            return Err(Error::Internal("biquadratic construction failed substitution".into()));
        }
        return Ok(Some(cert));
    }
    Ok(None)
}

/// Rescales `r⁴ = t` to `r'⁴ = t'` with `t'` an integer free of fourth powers
/// (as far as trial division reaches), returning `(t', λ)` with `r = λr'`.
fn integral_radicand(t: &Rational) -> (Rational, Rational) {
    let m = t.denom().clone();
    let mut whole = t.numer() * &m * &m * &m;
    let mut lambda = Rational::new(One::one(), m);
    if let Ok(f) = crate::arith::factor_integer(&whole) {
        for (prime, e) in f.factors {
            let k = e / 4;
            if k > 0 {
                let pk = num_traits::pow(prime, k as usize);
                whole /= num_traits::pow(pk.clone(), 4);
                lambda *= Rational::from_integer(pk);
            }
        }
    }
    (Rational::from_integer(whole), lambda)
}

/// Decides a reducible quartic from its rational factorization.
pub fn decide_reducible_quartic(f: &QPoly, factors: &QuarticFactorization) -> Result<Verdict> {
    let diagnostics = Diagnostics::default();
    match factors {
        QuarticFactorization::Irreducible => Err(Error::Precondition("no factorization supplied".into())),
        QuarticFactorization::Linear { roots } => {
            if roots.is_empty() || roots.iter().any(|r| !f.eval(r).is_zero()) {
                return Err(Error::Precondition("listed values are not roots".into()));
            }
            let min = roots.iter().min().expect("nonempty").clone();
            Ok(Verdict::new(Outcome::RationalRoot(min), diagnostics))
        }
        QuarticFactorization::Quadratics(f1, f2) => {
            if &f1.poly() * &f2.poly() != *f {
                return Err(Error::Precondition("factors do not multiply to the quartic".into()));
            }
            let mut rational: Vec<Rational> = f1.rational_roots().into_iter().chain(f2.rational_roots()).collect();
            rational.sort();
            if let Some(r) = rational.first() {
                return Ok(Verdict::new(Outcome::RationalRoot(r.clone()), diagnostics));
            }
            for factor in [f1, f2] {
                let delta = factor.discriminant();
                if delta.is_positive() {
                    let cert = quadratic_certificate(factor)?;
                    return Ok(Verdict::new(
                        Outcome::OneRadical(cert),
                        Diagnostics { quadratic_discriminant: Some(delta), ..diagnostics },
                    ));
                }
            }
            Ok(Verdict::new(
                Outcome::NotOneSolvable("both quadratic factors have negative discriminant".into()),
                diagnostics,
            ))
        }
    }
}
