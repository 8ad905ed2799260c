//! The scalar abstraction shared by polynomials, matrices and radical rings.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{FromPrimitive, One, Zero};

/// A field element usable as a coefficient.
///
/// Exact types (`BigRational`) give exact results; `f32`/`f64` are accepted
/// for numeric experimentation, where equality tests are only as good as the
/// floating-point arithmetic behind them.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + FromPrimitive
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Send
    + Sync
{
    fn from_usize_lossy(n: usize) -> Self {
        Self::from_usize(n).expect("scalar cannot represent a small integer")
    }
}

impl<T> Scalar for T where
    T: Clone
        + Debug
        + PartialEq
        + Zero
        + One
        + FromPrimitive
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
        + Send
        + Sync
{
}
