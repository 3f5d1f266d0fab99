#![allow(dead_code)]

use qh_toeplitz::algebra::{rat, rat_int};
use qh_toeplitz::{Polynomial, RadialSymbol, RadialTerm, Rational, RationalFunction};
use rand::Rng;

/// Exponent in `(-2, 6]` with denominator 1, 2 or 3.
pub fn random_exponent<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let d = rng.gen_range(1..=3);
        let e = rat(rng.gen_range(-6 * d..=6 * d), d);
        if e > rat_int(-2) {
            return e;
        }
    }
}

pub fn random_nonzero_coeff<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let c = rat(rng.gen_range(-9..=9), rng.gen_range(1..=5));
        if c != rat_int(0) {
            return c;
        }
    }
}

/// Nonzero log-free symbol with one to three terms.
pub fn random_log_free<R: Rng>(rng: &mut R) -> RadialSymbol {
    loop {
        let n = rng.gen_range(1..=3);
        let terms = (0..n)
            .map(|_| RadialTerm::new(random_nonzero_coeff(rng), random_exponent(rng), 0).unwrap());
        let s = RadialSymbol::new(terms).unwrap();
        if !s.is_zero() {
            return s;
        }
    }
}

pub fn random_poly<R: Rng>(rng: &mut R, max_degree: usize) -> Polynomial {
    let d = rng.gen_range(0..=max_degree);
    Polynomial::new(
        (0..=d)
            .map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=4)))
            .collect(),
    )
}

pub fn random_nonzero_rf<R: Rng>(rng: &mut R) -> RationalFunction {
    loop {
        let num = random_poly(rng, 4);
        let den = random_poly(rng, 4);
        if num.is_zero() || den.is_zero() {
            continue;
        }
        return RationalFunction::new(num, den).unwrap();
    }
}
