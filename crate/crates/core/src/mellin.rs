//! The Mellin transform `f̂(z) = ∫₀¹ f(r) r^{z-1} dr` as an exact map between
//! radial symbols and rational functions.
//!
//! Term by term, `r^α · ln(1/r)^ℓ ↦ ℓ! / (z + α)^{ℓ+1}`. The integral only
//! converges for `Re z > -α`, but the rational expression is used everywhere
//! off its poles; callers that evaluate at a point get
//! [`Error::PoleAtEvaluation`] instead of a silent value.

use num_traits::{One, Signed};

use crate::algebra::{
    factorial, rat_int, rf_partial_fractions, Polynomial, Rational, RationalFunction,
};
use crate::error::{Error, Result};
use crate::symbols::{RadialSymbol, RadialTerm};

pub fn mellin_transform(phi: &RadialSymbol) -> RationalFunction {
    phi.terms().iter().fold(RationalFunction::zero(), |acc, t| {
        let c = &t.coeff * factorial(t.log_power);
        &acc + &RationalFunction::pole_term(c, &-t.exponent.clone(), t.log_power + 1)
    })
}

/// Inverse of [`mellin_transform`] on strictly proper functions whose poles
/// are rational and lie left of `z = 2`. A pole of order `j` at `π`
/// becomes `r^{-π} ln(1/r)^{j-1} / (j-1)!`.
pub fn inverse_mellin(f: &RationalFunction) -> Result<RadialSymbol> {
    if !f.is_strictly_proper() {
        return Err(Error::NotProper);
    }
    let pf = rf_partial_fractions(f)?;
    let terms = pf
        .terms
        .iter()
        .map(|t| {
            let log_power = t.multiplicity - 1;
            RadialTerm::new(
                &t.coefficient / factorial(log_power),
                -t.pole.clone(),
                log_power,
            )
        })
        .collect::<Result<Vec<_>>>()?;
    RadialSymbol::new(terms)
}

/// `F(z) = Γ(w)Γ(w+q+m+1) / (Γ(w+m+1)Γ(w+q+1))` with `w = z/2s`, `q = p/s`,
/// reduced through `Γ(x+1) = xΓ(x)` to
/// `Π_{i=1..m}(w+q+i) / Π_{i=0..m}(w+i)`.
pub fn build_f_thm2(p: u32, s: u32, m: u32) -> RationalFunction {
    assert!(p >= 1 && s >= 1, "build_f_thm2 needs p, s >= 1");
    let two_s = rat_int(2 * s as i64);
    let w_plus = |shift: Rational| Polynomial::new(vec![shift, two_s.recip()]);
    let q = Rational::new((p as i64).into(), (s as i64).into());
    let num = (1..=m).fold(Polynomial::one(), |acc, i| {
        &acc * &w_plus(&q + rat_int(i as i64))
    });
    let den = (0..=m).fold(Polynomial::one(), |acc, i| {
        &acc * &w_plus(rat_int(i as i64))
    });
    RationalFunction::new(num, den).expect("nonzero denominator")
}

/// `F(z) = Γ(z/2p) / Γ(z/2p + 2) = 1/(z(z + 2p))`.
pub fn build_f_thm3(p: u32) -> RationalFunction {
    assert!(p >= 1, "build_f_thm3 needs p >= 1");
    let den = &Polynomial::x() * &Polynomial::from_ints(&[2 * p as i64, 1]);
    RationalFunction::new(Polynomial::one(), den).expect("nonzero denominator")
}

/// Whether `f(p·k + n0) = 0` for every natural `k`.
///
/// A nonzero rational function has finitely many zeros, so this holds
/// exactly when `f` is identically zero; no sampling is involved, and the
/// starting point `_n0` does not affect the answer.
pub fn vanishing_on_sequence(f: &RationalFunction, p: u32, _n0: i64) -> bool {
    assert!(p >= 1, "sequence step must be positive");
    f.is_zero()
}

/// Checks that every pole of `f` is in `{0, -2s, -4s, …, -2ms}`.
pub fn poles_on_lattice(f: &RationalFunction, s: u32, m: u32) -> Result<bool> {
    let pf = rf_partial_fractions(f)?;
    Ok(pf.terms.iter().all(|t| {
        let k = -&t.pole / rat_int(2 * s as i64);
        k.is_integer() && !k.is_negative() && k <= rat_int(m as i64)
    }))
}

/// `r^shift · φ` has transform `φ̂(z + shift)`.
pub fn shift_transform(f: &RationalFunction, shift: &Rational) -> RationalFunction {
    f.compose_affine(&Rational::one(), shift)
}
