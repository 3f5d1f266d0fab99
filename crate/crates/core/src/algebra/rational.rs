use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "rat: zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn factorial(n: u32) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    Rational::from_integer(acc)
}

/// Exact `num/den` string, or a bare integer when the denominator is 1.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

/// Parses `[-]int` or `[-]int/int`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = |message: &str| Error::Syntax {
        position: 0,
        message: format!("{message}: {text:?}"),
    };
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let num: BigInt = num.parse().map_err(|_| bad("invalid integer"))?;
    let den: BigInt = match den {
        Some(d) => d.parse().map_err(|_| bad("invalid denominator"))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}
