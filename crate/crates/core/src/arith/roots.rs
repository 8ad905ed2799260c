//! Real-root counting with Sturm chains, rational roots, and root refinement.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::rational::{denom_lcm, from_int};
use crate::error::{Error, Result};
use crate::{QPoly, Rational};

/// `f / gcd(f, f')`, monic. Same distinct roots as `f`, all simple.
pub fn squarefree_part(f: &QPoly) -> QPoly {
    let g = f.gcd(&f.derivative());
    f.divmod(&g).expect("gcd of nonzero polynomial is nonzero").0.monic()
}

/// Sturm chain of a squarefree polynomial.
///
/// Members are kept as primitive integer polynomials (positive rescalings,
/// so signs are unchanged) and evaluated by homogeneous Horner, which avoids
/// rational normalization in the inner loop.
#[derive(Clone, Debug)]
pub struct SturmChain {
    squarefree: QPoly,
    chain: Vec<Vec<BigInt>>,
}

/// Positive multiple of `f` with coprime integer coefficients.
fn primitive_integer(f: &QPoly) -> Vec<BigInt> {
    let scale = from_int(denom_lcm(f.coeffs()));
    let ints: Vec<BigInt> = f.coeffs().iter().map(|c| (c * &scale).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, a| g.gcd(a));
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.into_iter().map(|a| a / &g).collect()
    }
}

/// Sign of `f(a/b)` for integer coefficients, `b > 0`.
fn sign_at(f: &[BigInt], x: &Rational) -> i8 {
    let (a, b) = (x.numer(), x.denom());
    let mut acc = f.last().cloned().unwrap_or_default();
    let mut bpow = BigInt::one();
    for c in f.iter().rev().skip(1) {
        bpow *= b;
        acc = acc * a + c * &bpow;
    }
    match acc.sign() {
        num_bigint::Sign::Plus => 1,
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
    }
}

impl SturmChain {
    /// Builds the chain for the squarefree part of `f`.
    pub fn new(f: &QPoly) -> Self {
        let p0 = squarefree_part(f);
        let mut chain = vec![p0.clone(), p0.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let (_, r) = chain[n - 2].divmod(&chain[n - 1]).expect("nonzero");
            if r.is_zero() {
                break;
            }
            chain.push(-&r);
        }
        SturmChain { chain: chain.iter().map(primitive_integer).collect(), squarefree: p0 }
    }

    pub fn squarefree(&self) -> &QPoly {
        &self.squarefree
    }

    fn sign_changes(&self, x: &Rational) -> usize {
        let mut last = 0i8;
        let mut changes = 0;
        for p in &self.chain {
            let s = sign_at(p, x);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
        changes
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count(&self, a: &Rational, b: &Rational) -> usize {
        self.sign_changes(a).saturating_sub(self.sign_changes(b))
    }
}

/// A strict bound on the absolute value of every complex root.
pub fn cauchy_bound(f: &QPoly) -> Rational {
    let lc = f.leading().expect("nonzero polynomial").abs();
    let n = f.coeffs().len() - 1;
    let max =
        f.coeffs()[..n].iter().map(|c| c.abs() / lc.clone()).fold(Rational::zero(), |m, c| if c > m { c } else { m });
    Rational::one() + max
}

/// Rational roots of `f`, ascending.
///
/// Clears denominators to integer coefficients `aᵢ`, then substitutes
/// `x = y / a_d` to obtain a monic integer polynomial whose rational roots are
/// integers dividing its constant term. Those integers are located by Sturm
/// bisection over integer intervals, never by enumerating divisors, so no
/// factorization (and no factorization bound) is involved.
pub fn rational_roots(f: &QPoly) -> Result<Vec<Rational>> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let scale = from_int(denom_lcm(f.coeffs()));
    let ints: Vec<BigInt> = f.coeffs().iter().map(|c| (c * &scale).to_integer()).collect();
    let lead = ints[n].clone();
    let monic: Vec<BigInt> = ints
        .iter()
        .enumerate()
        .map(|(i, a)| if i == n { BigInt::one() } else { a * num_traits::pow(lead.clone(), n - 1 - i) })
        .collect();
    let constant = monic[0].clone();
    let g = QPoly::new(monic.iter().cloned().map(from_int).collect());
    let chain = SturmChain::new(&g);
    let cauchy = monic[..n].iter().map(|a| a.abs()).max().unwrap_or_default() + BigInt::one();
    // a nonzero integer root divides the constant term
    let bound = if constant.is_zero() { cauchy } else { cauchy.min(constant.abs() + BigInt::one()) };

    let mut found = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        if chain.count(&from_int(lo.clone()), &from_int(hi.clone())) == 0 {
            continue;
        }
        if &hi - &lo == BigInt::one() {
            // rational root theorem: an integer root divides the constant term
            let divides = hi.is_zero() || constant.is_multiple_of(&hi);
            if divides && g.eval(&from_int(hi.clone())).is_zero() {
                found.push(Rational::new(hi, lead.clone()));
            }
            continue;
        }
        let mid = (&lo + &hi).div_floor(&BigInt::from(2));
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    found.sort();
    found.dedup();
    Ok(found)
}

/// Disjoint half-open intervals `(a, b]`, ascending, each holding exactly one
/// distinct real root of `f`.
pub fn isolate_real_roots(f: &QPoly) -> Result<Vec<(Rational, Rational)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let chain = SturmChain::new(f);
    if chain.squarefree().degree() == Some(0) {
        return Ok(Vec::new());
    }
    let b = cauchy_bound(chain.squarefree());
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    let two = from_int(2);
    while let Some((lo, hi)) = stack.pop() {
        match chain.count(&lo, &hi) {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let mid = (&lo + &hi) / &two;
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Shrinks an isolating interval of `f` until its width is at most `width`.
pub fn refine_root(f: &QPoly, interval: (Rational, Rational), width: &Rational) -> (Rational, Rational) {
    let chain = SturmChain::new(f);
    let (mut lo, mut hi) = interval;
    let two = from_int(2);
    while &(&hi - &lo) > width {
        let mid = (&lo + &hi) / &two;
        if chain.count(&lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::factor::factor_integer;
    use crate::arith::rational::q;
    use crate::Poly;
    use proptest::prelude::*;

    fn qp(c: &[i64]) -> QPoly {
        Poly::new(c.iter().map(|&v| q(v, 1)).collect())
    }

    fn divisors(m: &BigInt) -> Vec<BigInt> {
        let fz = factor_integer(m).unwrap();
        let mut ds = vec![BigInt::one()];
        for (p, e) in &fz.factors {
            let mut next = Vec::new();
            for d in &ds {
                let mut pk = BigInt::one();
                for _ in 0..=*e {
                    next.push(d * &pk);
                    pk *= p;
                }
            }
            ds = next;
        }
        ds
    }

    /// Independent route: enumerate ±p/q over divisors of the integer-cleared
    /// constant and leading coefficients.
    fn candidate_oracle(f: &QPoly) -> Vec<Rational> {
        let scale = from_int(denom_lcm(f.coeffs()));
        let ints: Vec<BigInt> = f.coeffs().iter().map(|c| (c * &scale).to_integer()).collect();
        let mut out = Vec::new();
        let k = ints.iter().position(|a| !a.is_zero()).unwrap();
        if k > 0 {
            out.push(Rational::zero());
        }
        let (c0, cn) = (&ints[k], ints.last().unwrap());
        for p in divisors(c0) {
            for qd in divisors(cn) {
                for s in [1, -1] {
                    let cand = Rational::new(p.clone() * s, qd.clone());
                    if f.eval(&cand).is_zero() {
                        out.push(cand);
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn examples() {
        assert_eq!(rational_roots(&qp(&[0, -1, 0, 1])).unwrap(), vec![q(-1, 1), q(0, 1), q(1, 1)]);
        assert!(rational_roots(&qp(&[-2, 6, 0, 1])).unwrap().is_empty());
        assert!(rational_roots(&qp(&[2, -8, -4, 0, 1])).unwrap().is_empty());
        assert_eq!(rational_roots(&QPoly::zero()), Err(Error::ZeroPolynomial));
        assert!(rational_roots(&qp(&[5])).unwrap().is_empty());
    }

    #[test]
    fn oracle_agrees_on_examples() {
        for f in [qp(&[-2, 6, 0, 1]), qp(&[2, -8, -4, 0, 1]), qp(&[0, -1, 0, 1])] {
            assert_eq!(rational_roots(&f).unwrap(), candidate_oracle(&f));
        }
    }

    #[test]
    fn fractional_and_repeated_roots() {
        // (2x - 1)^2 (3x + 4)
        let f = &(&qp(&[-1, 2]) * &qp(&[-1, 2])) * &qp(&[4, 3]);
        assert_eq!(rational_roots(&f).unwrap(), vec![q(-4, 3), q(1, 2)]);
        let g = Poly::new(vec![q(-1, 6), q(1, 1)]);
        assert_eq!(rational_roots(&g).unwrap(), vec![q(1, 6)]);
    }

    #[test]
    fn sturm_counts() {
        let f = qp(&[0, -1, 0, 1]);
        let c = SturmChain::new(&f);
        assert_eq!(c.count(&q(-2, 1), &q(2, 1)), 3);
        assert_eq!(c.count(&q(-1, 1), &q(1, 1)), 2);
        let iso = isolate_real_roots(&qp(&[-2, 0, 1])).unwrap();
        assert_eq!(iso.len(), 2);
        let (lo, hi) = refine_root(&qp(&[-2, 0, 1]), iso[1].clone(), &q(1, 1_000_000));
        assert!(lo < q(1414214, 1_000_000) && hi > q(1414213, 1_000_000));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn matches_divisor_enumeration(
            roots in proptest::collection::vec((-12i64..12, 1i64..6), 0..3),
            extra in proptest::collection::vec(-9i64..9, 1..3),
        ) {
            let mut f = Poly::new(extra.iter().map(|&v| q(v, 1)).chain([q(1, 1)]).collect());
            for (n, d) in roots {
                f = &f * &Poly::new(vec![q(-n, d), q(1, 1)]);
            }
            prop_assert_eq!(rational_roots(&f).unwrap(), candidate_oracle(&f));
        }
    }
}
