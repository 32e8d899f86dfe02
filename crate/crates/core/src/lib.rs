//! Exact fusion-ring, polynomial-ideal and ordered K0 computations for the
//! level-k WZW categories of SU(2), SU(3), Sp(4) and G2.
//!
//! Integer and rational data are exact throughout. Floating-point work (the
//! Kac-Peterson S-matrix, quantum dimensions, sampled identities) is generic
//! over [`Real`] and defaults to the double-double type [`Extended`].

pub mod charpoly;
pub mod config;
pub mod error;
mod extended;
pub mod fusion;
pub mod ideals;
pub mod ktheory;
pub mod lie;
pub mod linalg;
pub mod numeric;
pub mod poly;
pub mod report;
pub mod suites;

pub use config::{Config, Precision};
pub use extended::Extended;
pub use error::{Error, Result};
pub use lie::{GroupId, Weight};
pub use numeric::Real;

/// Double-double scalar (about 106 significant bits).

/// Sparse polynomial with big-integer coefficients; exponents may be negative.
pub type IntPoly = poly::Poly<num_bigint::BigInt>;
/// Sparse polynomial with exact rational coefficients.
pub type RatPoly = poly::Poly<num_rational::BigRational>;
/// Laurent polynomials share the representation of [`IntPoly`].
pub type LaurentPoly = IntPoly;

/// S-matrix at the default working precision.
pub type SMatrix = fusion::smatrix::SMatrix<Extended>;
/// S-matrix in plain doubles.
pub type SMatrixF64 = fusion::smatrix::SMatrix<f64>;
