use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{rat_int, Rational};
use crate::error::{Error, Result};

/// `coeff · r^exponent · ln(1/r)^log_power`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RadialTerm {
    pub coeff: Rational,
    pub exponent: Rational,
    pub log_power: u32,
}

impl RadialTerm {
    pub fn new(coeff: Rational, exponent: Rational, log_power: u32) -> Result<Self> {
        check_exponent(&exponent)?;
        Ok(RadialTerm {
            coeff,
            exponent,
            log_power,
        })
    }
}

pub(crate) fn check_exponent(exponent: &Rational) -> Result<()> {
    if *exponent <= rat_int(-2) {
        return Err(Error::InadmissibleExponent {
            exponent: exponent.clone(),
        });
    }
    Ok(())
}

/// Canonical finite sum of [`RadialTerm`]s: sorted by `(exponent,
/// log_power)`, no repeated keys, no zero coefficients. The empty sum is the
/// zero symbol.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct RadialSymbol {
    terms: Vec<RadialTerm>,
}

impl RadialSymbol {
    /// Sums the given terms, merging like terms and dropping zeros.
    pub fn new(terms: impl IntoIterator<Item = RadialTerm>) -> Result<Self> {
        let mut acc: BTreeMap<(Rational, u32), Rational> = BTreeMap::new();
        for t in terms {
            check_exponent(&t.exponent)?;
            *acc.entry((t.exponent, t.log_power))
                .or_insert_with(Rational::zero) += t.coeff;
        }
        Ok(RadialSymbol {
            terms: acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|((exponent, log_power), coeff)| RadialTerm {
                    coeff,
                    exponent,
                    log_power,
                })
                .collect(),
        })
    }

    pub fn zero() -> Self {
        RadialSymbol { terms: Vec::new() }
    }

    /// The constant function 1.
    pub fn one() -> Self {
        Self::monomial(Rational::one(), Rational::zero()).expect("exponent 0 is admissible")
    }

    /// `coeff · r^exponent`.
    pub fn monomial(coeff: Rational, exponent: Rational) -> Result<Self> {
        Self::new([RadialTerm::new(coeff, exponent, 0)?])
    }

    /// `r^n` for an integer `n > -2`.
    pub fn power(n: i64) -> Result<Self> {
        Self::monomial(Rational::one(), rat_int(n))
    }

    /// `Σ coeffs[j] · r^exponents[j]`.
    pub fn from_coefficients(exponents: &[Rational], coeffs: &[Rational]) -> Result<Self> {
        assert_eq!(exponents.len(), coeffs.len());
        Self::new(exponents.iter().zip(coeffs).map(|(e, c)| RadialTerm {
            coeff: c.clone(),
            exponent: e.clone(),
            log_power: 0,
        }))
    }

    pub fn terms(&self) -> &[RadialTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_log_free(&self) -> bool {
        self.terms.iter().all(|t| t.log_power == 0)
    }

    /// `(coeff, exponent)` if the symbol is a single log-free term.
    pub fn as_monomial(&self) -> Option<(&Rational, &Rational)> {
        match self.terms.as_slice() {
            [t] if t.log_power == 0 => Some((&t.coeff, &t.exponent)),
            _ => None,
        }
    }

    pub fn min_exponent(&self) -> Option<&Rational> {
        self.terms.first().map(|t| &t.exponent)
    }

    /// Coefficient of `r^exponent` (log power 0).
    pub fn coefficient_of(&self, exponent: &Rational) -> Rational {
        self.terms
            .iter()
            .find(|t| &t.exponent == exponent && t.log_power == 0)
            .map(|t| t.coeff.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RadialSymbol {
            terms: self
                .terms
                .iter()
                .map(|t| RadialTerm {
                    coeff: &t.coeff * c,
                    ..t.clone()
                })
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.terms.iter().chain(&other.terms).cloned()).expect("admissible inputs")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Rescales to integer coefficients with gcd 1 and a positive first
    /// (lowest-exponent) coefficient. Two symbols are proportional iff their
    /// primitive forms coincide.
    pub fn primitive(&self) -> Self {
        let Some(first) = self.terms.first() else {
            return Self::zero();
        };
        let lcm = self
            .terms
            .iter()
            .fold(BigInt::one(), |acc, t| acc.lcm(t.coeff.denom()));
        let gcd = self
            .terms
            .iter()
            .fold(BigInt::zero(), |acc, t| acc.gcd(t.coeff.numer()));
        let mut factor = Rational::new(lcm, gcd);
        if first.coeff.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// True when `other = c · self` for some nonzero rational `c`.
    pub fn proportional_to(&self, other: &Self) -> bool {
        !self.is_zero() && !other.is_zero() && self.primitive() == other.primitive()
    }

    /// Floating-point value at the radius `r = exp(-log_inv_r)`. Taking
    /// `ln(1/r)` as the argument keeps small radii accurate.
    pub fn eval_f64(&self, log_inv_r: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.terms
            .iter()
            .map(|t| {
                let c = t.coeff.to_f64().unwrap_or(f64::NAN);
                let a = t.exponent.to_f64().unwrap_or(f64::NAN);
                let power = if a == 0.0 {
                    1.0
                } else {
                    (-a * log_inv_r).exp()
                };
                c * power * log_inv_r.powi(t.log_power as i32)
            })
            .sum()
    }
}

impl fmt::Display for RadialSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            let abs = t.coeff.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let bare_constant = t.exponent.is_zero() && t.log_power == 0;
            if bare_constant {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write!(f, "r^({})", t.exponent)?;
            if t.log_power > 0 {
                write!(f, "*L^{}", t.log_power)?;
            }
        }
        Ok(())
    }
}

/// `e^{i·degree·θ} · radial(r)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QHSymbol {
    pub degree: i64,
    pub radial: RadialSymbol,
}

impl QHSymbol {
    pub fn new(degree: i64, radial: RadialSymbol) -> Self {
        QHSymbol { degree, radial }
    }

    /// Degree-zero (radial) symbol.
    pub fn radial(radial: RadialSymbol) -> Self {
        QHSymbol { degree: 0, radial }
    }
}

impl fmt::Display for QHSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree == 0 {
            return write!(f, "{}", self.radial);
        }
        if self.radial.terms().len() == 1 && !self.radial.terms()[0].coeff.is_negative() {
            write!(f, "E({})*{}", self.degree, self.radial)
        } else {
            write!(f, "E({})*({})", self.degree, self.radial)
        }
    }
}

/// Exponent-based class of a radial symbol. This labels the symbol only; it
/// is not a statement about the operator norm.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum BoundednessClass {
    /// Minimum exponent ≥ 0.
    BoundedSymbol,
    /// Minimum exponent in `[-1, 0)`.
    NearlyBounded,
    /// Minimum exponent in `(-2, -1)`.
    IntegrableOnly,
}

pub fn classify_boundedness(phi: &RadialSymbol) -> Result<BoundednessClass> {
    let min = phi.min_exponent().ok_or(Error::ZeroSymbol)?;
    Ok(if !min.is_negative() {
        BoundednessClass::BoundedSymbol
    } else if *min >= rat_int(-1) {
        BoundednessClass::NearlyBounded
    } else {
        BoundednessClass::IntegrableOnly
    })
}

/// Mellin convolution `(f ∗ g)(r) = ∫₀¹ f(t) g(r/t) dt/t` of log-free
/// symbols, by bilinear extension of
///
/// * `r^a ∗ r^b = (r^b - r^a)/(a - b)` for `a ≠ b`,
/// * `r^a ∗ r^a = r^a · ln(1/r)`.
pub fn mellin_convolve(f: &RadialSymbol, g: &RadialSymbol) -> Result<RadialSymbol> {
    if !f.is_log_free() || !g.is_log_free() {
        return Err(Error::Unsupported(
            "Mellin convolution of log-bearing symbols".into(),
        ));
    }
    let mut out = Vec::new();
    for s in f.terms() {
        for t in g.terms() {
            let c = &s.coeff * &t.coeff;
            if s.exponent == t.exponent {
                out.push(RadialTerm {
                    coeff: c,
                    exponent: s.exponent.clone(),
                    log_power: 1,
                });
            } else {
                let d = &s.exponent - &t.exponent;
                out.push(RadialTerm {
                    coeff: &c / &d,
                    exponent: t.exponent.clone(),
                    log_power: 0,
                });
                out.push(RadialTerm {
                    coeff: -(&c / &d),
                    exponent: s.exponent.clone(),
                    log_power: 0,
                });
            }
        }
    }
    RadialSymbol::new(out)
}
