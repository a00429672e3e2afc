//! Exact polynomial factorization: univariate over Q, bivariate monic in T,
//! and splitting over the Gaussian rationals for two-squares decompositions.

mod bivariate;
mod gaussian;
mod univariate;

pub use bivariate::factor_bipoly;
pub use gaussian::{split_over_gaussian, two_squares_int, two_squares_rat, GaussPoly, GaussRat};
pub use univariate::{compare_polys, factor_squarefree, factor_unipoly};
