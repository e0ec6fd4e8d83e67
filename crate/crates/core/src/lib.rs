//! Exact computations around the Drinfeld functor: degenerate affine Hecke
//! algebra modules, their images as Yangian modules, and Kazhdan-Lusztig
//! multiplicities.

pub mod combinat;
pub mod dfun;
pub mod error;
pub mod exactnum;
pub mod hecke;
pub mod json;
pub mod kl;
pub mod linalg;
pub mod poly;
pub mod scalar;
pub mod spectral;
pub mod wrep;
pub mod yangian;

pub use error::{Error, ErrorClass, Result};
pub use exactnum::{RatFun, Series, UniPoly};
pub use scalar::{Field, Rational};

/// Exact rational matrix.
pub type Matrix = linalg::DenseMatrix<Rational>;
/// Exact rational subspace.
pub type RatSubspace = linalg::Subspace<Rational>;
