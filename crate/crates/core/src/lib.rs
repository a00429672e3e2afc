//! Exact-arithmetic certification of T-real-rootedness and hyperbolicity,
//! and construction of symmetric T-spectral determinantal representations.
//!
//! Everything past the parsing layer runs over arbitrary-precision rationals;
//! every acceptance decision is an exact polynomial identity or an exact
//! Sturm count, never a floating-point estimate. Floating point appears only
//! in convenience output (numeric square roots, plot data) and is always
//! flagged as such.

pub mod bipoly;
pub mod error;
pub mod factor;
pub mod hermite;
pub mod matpoly;
pub mod nuij;
pub mod num;
pub mod ratfunc;
pub mod real_roots;
pub mod ternary;
pub mod unipoly;

pub use bipoly::BiPoly;
pub use error::Error;
pub use hermite::hermite_matrix;
pub use matpoly::{MatPoly, SymMatrixPoly};
pub use num::Rat;
pub use ratfunc::RatFunc;
pub use real_roots::{RootCertificate, Verdict};
pub use ternary::TernaryForm;
pub use unipoly::{UniPoly, Var};
