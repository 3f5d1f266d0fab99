//! Exact computations for quasihomogeneous Toeplitz operators on the
//! harmonic Bergman space of the unit disk.
//!
//! A quasihomogeneous symbol `e^{ipθ} φ(r)` acts on the harmonic basis
//! `{z^k} ∪ {z̄^k}` as a weighted shift whose weights are values of the
//! Mellin transform `φ̂(z) = ∫₀¹ φ(r) r^{z-1} dr`. For the symbols handled
//! here (finite sums of `c · r^α · ln(1/r)^ℓ`) the Mellin transform is a
//! rational function, so every question about commutation reduces to exact
//! rational arithmetic.
//!
//! Layout:
//!
//! * [`algebra`]: rationals, polynomials, rational functions, partial
//!   fractions and exact kernels.
//! * [`symbols`]: radial and quasihomogeneous symbols, their text grammar,
//!   boundedness classes and the Mellin convolution.
//! * [`mellin`]: the transform, its inverse and the `F(z)` constructors.
//! * [`operators`]: the basis action, commutators and truncated matrices.
//! * [`commutant`]: constraint generation and the commutant pipelines.
//! * [`quadrature`]: a floating-point oracle that recomputes the basis action
//!   from the projection definition.
//! * [`cli`]: the `qht` command-line front end.

pub mod algebra;
pub mod cli;
pub mod commutant;
mod error;
pub mod mellin;
pub mod operators;
pub mod quadrature;
pub mod symbols;

pub use algebra::{
    kernel_basis, rf_partial_fractions, rf_reduce, ExactMatrix, PartialFractions, Polynomial,
    Rational, RationalFunction,
};
pub use error::{Error, Result};
pub use symbols::{parse_symbol, BoundednessClass, QHSymbol, RadialSymbol, RadialTerm};
