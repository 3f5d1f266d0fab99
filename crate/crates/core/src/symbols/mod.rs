//! Radial and quasihomogeneous symbols.
//!
//! A [`RadialSymbol`] is a finite sum of terms `c · r^α · ln(1/r)^ℓ` with
//! rational `c` and `α > -2` (so the symbol is integrable on the disk). A
//! [`QHSymbol`] pairs one with an angular factor `e^{ipθ}`.

mod parse;
mod radial;

pub use parse::parse_symbol;
pub use radial::{
    classify_boundedness, mellin_convolve, BoundednessClass, QHSymbol, RadialSymbol, RadialTerm,
};
