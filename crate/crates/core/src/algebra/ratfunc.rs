use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::Polynomial;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Quotient of two polynomials in canonical form: coprime, monic
/// denominator. Two rational functions are equal iff their canonical forms
/// are identical, so the derived `PartialEq` is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

/// Brings `num/den` to canonical form.
pub fn rf_reduce(num: Polynomial, den: Polynomial) -> Result<RationalFunction> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if num.is_zero() {
        return Ok(RationalFunction::zero());
    }
    let g = num.gcd(&den);
    let (num, _) = num.div_rem(&g);
    let (den, _) = den.div_rem(&g);
    let lead = den.leading().recip();
    Ok(RationalFunction {
        num: num.scale(&lead),
        den: den.scale(&lead),
    })
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        rf_reduce(num, den)
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    /// `c / (z - pole)^mult`.
    pub fn pole_term(c: Rational, pole: &Rational, mult: u32) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let den = Polynomial::linear_root(pole).pow(mult);
        RationalFunction {
            num: Polynomial::constant(c),
            den,
        }
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `deg num < deg den`; the zero function counts as strictly proper.
    pub fn is_strictly_proper(&self) -> bool {
        self.num.degree() < self.den.degree()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Exact value at `x`; a zero of the canonical denominator is a pole.
    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::PoleAtEvaluation { point: x.clone() });
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.num.eval_f64(x) / self.den.eval_f64(x)
    }

    pub fn recip(&self) -> Result<Self> {
        rf_reduce(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        rf_reduce(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    /// `f(a·x + b)`, for `a ≠ 0`.
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> Self {
        assert!(!a.is_zero(), "compose_affine with zero slope");
        rf_reduce(self.num.compose_affine(a, b), self.den.compose_affine(a, b))
            .expect("affine substitution keeps the denominator nonzero")
    }

    fn combine(num: Polynomial, den: Polynomial) -> Self {
        rf_reduce(num, den).expect("product of nonzero denominators")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &Polynomial| {
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        if self.den.is_constant() && self.den.leading().is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;

    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::combine(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::combine(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;

    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;

    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::combine(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: RationalFunction) -> RationalFunction {
        &self + &rhs
    }
}

impl Sub for RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: RationalFunction) -> RationalFunction {
        &self - &rhs
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: RationalFunction) -> RationalFunction {
        &self * &rhs
    }
}
