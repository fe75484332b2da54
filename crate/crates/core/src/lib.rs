//! Exact computation and machine verification of the classical identities
//! relating Sylvester double sums, subresultants, Bézout cofactors,
//! symmetric multivariate Lagrange interpolation and Schur polynomials.
//!
//! Everything is computed over an exact field (arbitrary-precision
//! rationals by default, a word-sized prime field for fast verification
//! runs), so every identity check is an exact equality with no tolerances.

pub mod error;
pub mod linalg;
pub mod poly;
pub mod scalar;
pub mod schur;
pub mod subres;
pub mod subsets;
pub mod sylvester;
pub mod syminterp;
pub mod verify;

pub use error::Error;
pub use poly::{RootSet, UniPoly};
pub use scalar::{binomial, Field, Fp, Fp61, Rat};
