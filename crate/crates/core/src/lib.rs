//! Salvetti complexes of finite and affine Weyl groups, their filtrations,
//! and exact integer homology.

pub mod complex;
pub mod error;
pub mod homology;
pub mod linalg;
pub mod scalar;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use scalar::{Int, Rational};
