//! Exact-arithmetic toolkit for Gaudin-type Poisson structures.
//!
//! Everything in this crate computes over the rationals: braidings and their
//! skew-inverse data, tensor-leg linear algebra, graded polynomial algebras
//! with color commutation factors, rational functions of spectral parameters,
//! the classical and braided Poisson bracket families, and reflection
//! equation algebras. All verification routines assert identities exactly —
//! there are no tolerances anywhere.

pub mod braiding;
pub mod error;
pub mod polyalg;
pub mod poisson;
pub mod ratfun;
pub mod rational;
pub mod re_algebra;
pub mod report;
pub mod ring;
pub mod rng;
pub mod tensor;

pub use error::Error;
pub use rational::Rational;
pub use report::CheckReport;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
