//! Exact arithmetic: rationals, univariate polynomials, rational functions,
//! partial fractions over rational poles, and null spaces of dense matrices.

mod matrix;
mod partial_fractions;
mod poly;
mod ratfunc;
mod rational;

pub use matrix::{kernel_basis, ExactMatrix};
pub use partial_fractions::{rational_roots, rf_partial_fractions, PartialFractions, PoleTerm};
pub use poly::Polynomial;
pub use ratfunc::{rf_reduce, RationalFunction};
pub use rational::{factorial, format_rational, parse_rational, rat, rat_int, Rational};
