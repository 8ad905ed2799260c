//! Arithmetic in `ℚ[x]/(xⁿ − t)` for a real radical `r = t^(1/n)`: products,
//! inverses, multiplication matrices, minimal polynomials, index
//! normalization, subfield reduction, and the quadratic extensions by `i`
//! and `ε` used for conjugate roots.

pub mod descriptor;
pub mod element;
pub mod matrix;
pub mod quadext;
mod wire;

pub use descriptor::{normalize_radical, ExponentMap, RadicalDescriptor};
pub use element::{RadicalElement, SubfieldReduction};
pub use matrix::Matrix;
pub use quadext::{QuadExt, QuadExtElement};
pub use wire::RadicalWire;

use crate::error::Result;
use crate::{QPoly, QRadical, Rational};

pub fn elem_mul(x: &QRadical, y: &QRadical) -> Result<QRadical> {
    x.try_mul(y)
}

pub fn elem_inverse(x: &QRadical) -> Result<QRadical> {
    x.inverse()
}

pub fn eval_poly_at_elem(f: &QPoly, x: &QRadical) -> QRadical {
    x.eval_poly(f)
}

pub fn mul_matrix(x: &QRadical) -> Matrix<Rational> {
    x.mul_matrix()
}

pub fn char_poly(m: &Matrix<Rational>) -> Result<QPoly> {
    m.char_poly()
}

pub fn min_poly(x: &QRadical) -> Result<QPoly> {
    x.min_poly()
}

pub fn subfield_reduce(beta: &QRadical) -> Result<SubfieldReduction<Rational>> {
    beta.subfield_reduce()
}
