//! Scalar traits the polynomial and matrix kernels are generic over.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Zero};

/// A commutative ring with unity.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + FromPrimitive
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn pow_u(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

impl<T> Ring for T where
    T: Clone
        + Debug
        + PartialEq
        + Zero
        + One
        + FromPrimitive
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// An integral domain whose `/` is exact whenever the divisor divides the
/// dividend. Fraction-free elimination relies on this.
pub trait ExactDiv: Ring + Div<Output = Self> {}

impl<T: Ring + Div<Output = T>> ExactDiv for T {}

/// Marker for scalars where every nonzero element is invertible.
pub trait Field: ExactDiv {}

impl Field for BigRational {}
impl Field for f64 {}
impl Field for f32 {}
