//! Exact decision procedures for solvability of rational cubic and quartic
//! polynomials by a single real radical.
//!
//! A polynomial is *1-solvable* when it has a real root in `ℚ[r]` for some
//! real `r` with `rⁿ ∈ ℚ`. This crate decides that property for cubics and
//! quartics, emits root certificates living in `ℚ[x]/(xⁿ − t)`, and checks
//! every certificate by exact substitution.
//!
//! The polynomial, matrix and radical-ring machinery is generic over the
//! scalar type (see [`Scalar`]); the decision procedures themselves work over
//! the exact rationals, exposed through the aliases below.

pub mod arith;
pub mod error;
pub mod radical;
pub mod scalar;
pub mod solvers;
pub mod verify;

pub use arith::poly::Poly;
pub use error::{Error, Result};
pub use radical::{QuadExt, QuadExtElement, RadicalDescriptor, RadicalElement};
pub use scalar::Scalar;
pub use solvers::{decide_polynomial, Certificate, Diagnostics, Outcome, Verdict};

/// Arbitrary-precision exact rational, always stored in lowest terms.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;

/// Dense polynomial over ℚ.
pub type QPoly = Poly<Rational>;
/// Dense polynomial over `f64`.
pub type FPoly = Poly<f64>;
/// Dense polynomial over `f32`.
pub type F32Poly = Poly<f32>;

/// Element of `ℚ[x]/(xⁿ − t)`.
pub type QRadical = RadicalElement<Rational>;
/// Radical descriptor with a rational radicand.
pub type QDescriptor = RadicalDescriptor<Rational>;
/// Element of `ℚ[r][i]` or `ℚ[r][ε]`.
pub type QQuadExt = QuadExtElement<Rational>;
/// Dense square matrix over ℚ, row-major.
pub type QMatrix = radical::matrix::Matrix<Rational>;
