//! Scalar traits shared by the matrix and homology code.
//!
//! Everything is generic over a commutative ring [`Ring`]; elimination that
//! needs division with remainder asks for [`EuclideanRing`], and rank over a
//! field asks for [`Field`]. The concrete instantiations used by the rest of
//! the crate are [`Int`] (arbitrary precision) and [`Rational`].

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, Signed};

/// Commutative ring with a sign, cheap enough to clone.
pub trait Ring: Num + Signed + Clone + Debug + Display + Send + Sync + 'static {}

impl<T> Ring for T where T: Num + Signed + Clone + Debug + Display + Send + Sync + 'static {}

/// Integers (any width) with Euclidean division.
pub trait EuclideanRing: Ring + Integer {}

impl<T> EuclideanRing for T where T: Ring + Integer {}

/// Marker for exact fields; division is always exact.
pub trait Field: Ring {}

impl Field for BigRational {}
impl Field for f64 {}
impl Field for f32 {}

/// Arbitrary-precision integers, the default scalar of every complex.
pub type Int = BigInt;

/// Exact rationals, used for rank cross-checks.
pub type Rational = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// `(-1)^e`.
pub fn sign<T: Ring>(exponent: usize) -> T {
    if exponent % 2 == 0 {
        T::one()
    } else {
        -T::one()
    }
}
