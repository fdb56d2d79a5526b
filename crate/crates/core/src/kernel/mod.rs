//! Exact arithmetic: rationals, dense rational matrices and sparse
//! multivariate polynomials over the rationals.

mod matrix;
mod poly;
mod rational;
mod univariate;

pub use matrix::{poly_det, Matrix};
pub use poly::{remainder_coeffs, Homogeneity, Poly};
pub use rational::{parse_rational, primitive_integer_vector, rat, Rational};
pub use univariate::UniPoly;
