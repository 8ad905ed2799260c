use crate::error::{Error, Result};
use crate::{QPoly, Rational};

/// A monic polynomial in `y` with vanishing second-highest coefficient,
/// related to the input by `x = y − shift` and division by `scale`.
#[derive(Clone, Debug, PartialEq)]
pub struct Depressed {
    pub poly: QPoly,
    pub shift: Rational,
    pub scale: Rational,
}

pub fn depress(f: &QPoly) -> Result<Depressed> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if !(3..=4).contains(&n) {
        return Err(Error::UnsupportedDegree(n));
    }
    let scale = f.leading().expect("nonzero").clone();
    let monic = f.monic();
    let shift = monic.coeff(n - 1) / Rational::from_integer(n.into());
    let poly = monic.taylor_shift(&-shift.clone());
    debug_assert!(poly.coeff(n - 1) == Rational::from_integer(0.into()));
    Ok(Depressed { poly, shift, scale })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::q;

    fn qp(c: &[i64]) -> QPoly {
        QPoly::new(c.iter().map(|&v| q(v, 1)).collect())
    }

    #[test]
    fn examples() {
        let d = depress(&qp(&[1, 3, 3, 1])).unwrap();
        assert_eq!((d.poly, d.shift, d.scale), (qp(&[0, 0, 0, 1]), q(1, 1), q(1, 1)));

        let d = depress(&qp(&[-4, 12, 0, 2])).unwrap();
        assert_eq!((d.poly, d.shift, d.scale), (qp(&[-2, 6, 0, 1]), q(0, 1), q(2, 1)));

        // (y-1)^4 + 4(y-1)^3 + 2(y-1)^2 - 4(y-1) + 1 = y^4 - 4y^2 + 4, expanded by hand
        let d = depress(&qp(&[1, -4, 2, 4, 1])).unwrap();
        assert_eq!(d.shift, q(1, 1));
        assert_eq!(d.poly, qp(&[4, 0, -4, 0, 1]));
    }

    #[test]
    fn wrong_degree() {
        assert_eq!(depress(&qp(&[1, 1])), Err(Error::UnsupportedDegree(1)));
        assert_eq!(depress(&qp(&[1, 0, 0, 0, 0, 1])), Err(Error::UnsupportedDegree(5)));
    }
}
