//! Exact rational arithmetic: scalars, dense polynomials, root finding and
//! integer factorization.

pub mod factor;
pub mod poly;
pub mod rational;
pub mod roots;

pub use factor::{factor_integer, factor_integer_with_bound, Factorization};
pub use rational::{nth_root_exact, parse_rational, q, sqrt_exact};
pub use roots::rational_roots;

use crate::error::Result;
use crate::QPoly;

/// Division with remainder over ℚ.
pub fn poly_divmod(f: &QPoly, g: &QPoly) -> Result<(QPoly, QPoly)> {
    f.divmod(g)
}
