//! Partial fractions over rational poles.
//!
//! Every denominator built by this crate splits into linear factors over the
//! rationals, so poles are found with the rational root test and any factor
//! left over after root extraction is reported as [`Error::UnsupportedPole`].

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::Polynomial;
use super::ratfunc::RationalFunction;
use super::rational::Rational;
use crate::error::{Error, Result};

/// `coefficient / (z - pole)^multiplicity`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PoleTerm {
    pub pole: Rational,
    pub multiplicity: u32,
    pub coefficient: Rational,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartialFractions {
    pub polynomial_part: Polynomial,
    /// Ordered by decreasing pole, then increasing multiplicity.
    pub terms: Vec<PoleTerm>,
}

impl PartialFractions {
    pub fn recombine(&self) -> RationalFunction {
        self.terms.iter().fold(
            RationalFunction::from_poly(self.polynomial_part.clone()),
            |acc, t| {
                &acc + &RationalFunction::pole_term(t.coefficient.clone(), &t.pole, t.multiplicity)
            },
        )
    }

    /// Coefficient of the simple-pole term at `pole`, zero when absent.
    pub fn residue(&self, pole: &Rational) -> Rational {
        self.terms
            .iter()
            .find(|t| &t.pole == pole && t.multiplicity == 1)
            .map(|t| t.coefficient.clone())
            .unwrap_or_else(Rational::zero)
    }
}

impl fmt::Display for PartialFractions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.polynomial_part.is_zero() {
            parts.push(self.polynomial_part.to_string());
        }
        for t in &self.terms {
            let base = Polynomial::linear_root(&t.pole);
            let den = if t.pole.is_zero() {
                "z".to_string()
            } else {
                format!("({base})")
            };
            let den = if t.multiplicity == 1 {
                den
            } else {
                format!("{den}^{}", t.multiplicity)
            };
            parts.push(format!("({})/{den}", t.coefficient));
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Rational roots of `p` with multiplicities, plus the cofactor that has no
/// rational roots (a nonzero constant when `p` splits completely).
pub fn rational_roots(p: &Polynomial) -> Result<(Vec<(Rational, u32)>, Polynomial)> {
    assert!(!p.is_zero(), "rational_roots of the zero polynomial");
    let mut rest = p.clone();
    let mut roots: Vec<(Rational, u32)> = Vec::new();

    let mut zero_mult = 0;
    while rest.degree().unwrap_or(0) > 0 && rest.coeff(0).is_zero() {
        rest = Polynomial::new(rest.coeffs()[1..].to_vec());
        zero_mult += 1;
    }
    if zero_mult > 0 {
        roots.push((Rational::zero(), zero_mult));
    }
    if rest.degree().unwrap_or(0) == 0 {
        return Ok((roots, rest));
    }

    let ints = integer_coefficients(&rest);
    let a0 = ints[0].abs();
    let an = ints.last().expect("nonconstant").abs();
    let nums = divisors(&a0)?;
    let dens = divisors(&an)?;

    for d in &dens {
        for n in &nums {
            if !n.gcd(d).is_one() {
                continue;
            }
            for sign in [1, -1] {
                if rest.degree().unwrap_or(0) == 0 {
                    break;
                }
                let cand = Rational::new(n * BigInt::from(sign), d.clone());
                let lin = Polynomial::linear_root(&cand);
                let mut mult = 0;
                loop {
                    if rest.degree().unwrap_or(0) == 0 || !rest.eval(&cand).is_zero() {
                        break;
                    }
                    let (q, r) = rest.div_rem(&lin);
                    debug_assert!(r.is_zero());
                    rest = q;
                    mult += 1;
                }
                if mult > 0 {
                    roots.push((cand, mult));
                }
            }
        }
    }
    Ok((roots, rest))
}

fn integer_coefficients(p: &Polynomial) -> Vec<BigInt> {
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    ints.into_iter().map(|c| c / &g).collect()
}

fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let n = n.to_u64().ok_or_else(|| {
        Error::Unsupported(format!(
            "rational root search on coefficient {n} is too large"
        ))
    })?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n % i == 0 {
            small.push(BigInt::from(i));
            if i * i != n {
                large.push(BigInt::from(n / i));
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// Exact partial fraction decomposition of `f`.
///
/// The Laurent coefficients at each pole are read off from the power series
/// of `num / cofactor` about that pole.
pub fn rf_partial_fractions(f: &RationalFunction) -> Result<PartialFractions> {
    let (poly_part, rem) = f.num().div_rem(f.den());
    if rem.is_zero() {
        return Ok(PartialFractions {
            polynomial_part: poly_part,
            terms: Vec::new(),
        });
    }
    let (mut roots, leftover) = rational_roots(f.den())?;
    if leftover.degree().unwrap_or(0) > 0 {
        return Err(Error::UnsupportedPole {
            factor: leftover.monic().to_string(),
        });
    }
    roots.sort_by(|a, b| b.0.cmp(&a.0));

    let mut terms = Vec::new();
    for (pole, mult) in &roots {
        // den = (z - pole)^mult * cofactor
        let (cofactor, r) = f.den().div_rem(&Polynomial::linear_root(pole).pow(*mult));
        debug_assert!(r.is_zero());
        let shift = |p: &Polynomial| p.compose_affine(&Rational::one(), pole);
        let series = series_quotient(&shift(&rem), &shift(&cofactor), *mult as usize);
        // series[i] multiplies t^i, i.e. 1/(z - pole)^(mult - i)
        for (i, c) in series.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            terms.push(PoleTerm {
                pole: pole.clone(),
                multiplicity: *mult - i as u32,
                coefficient: c,
            });
        }
    }
    terms.sort_by(|a, b| {
        b.pole
            .cmp(&a.pole)
            .then(a.multiplicity.cmp(&b.multiplicity))
    });
    Ok(PartialFractions {
        polynomial_part: poly_part,
        terms,
    })
}

/// First `n` power-series coefficients of `a / b` at 0; `b(0) ≠ 0`.
fn series_quotient(a: &Polynomial, b: &Polynomial, n: usize) -> Vec<Rational> {
    let b0_inv = b.coeff(0).recip();
    let mut out: Vec<Rational> = Vec::with_capacity(n);
    for i in 0..n {
        let mut acc = a.coeff(i);
        for (j, prev) in out.iter().enumerate() {
            acc -= prev * b.coeff(i - j);
        }
        out.push(acc * &b0_inv);
    }
    out
}
