//! Text grammar for symbols:
//!
//! ```text
//! qh       := [ "E(" integer ")" "*" ] ( radial | "(" radial ")" )
//! radial   := [sign] term { sign term }
//! term     := [ rational "*" ] mono | rational
//! mono     := "r^(" rational ")" [ "*" "L^" integer ]
//! rational := integer [ "/" positive-integer ]
//! ```
//!
//! `E(p)` stands for `e^{ipθ}` and `L` for `ln(1/r)`. Whitespace is ignored.
//! Exponents and the degree may carry a minus sign.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::radial::{QHSymbol, RadialSymbol, RadialTerm};
use crate::algebra::Rational;
use crate::error::{Error, Result};

pub fn parse_symbol(text: &str) -> Result<QHSymbol> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let sym = p.qh()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(sym)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Syntax {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn qh(&mut self) -> Result<QHSymbol> {
        let mut degree = 0;
        if self.eat(b'E') {
            self.expect(b'(')?;
            let start = self.pos;
            let d = self.signed_integer()?;
            degree = i64::try_from(d).map_err(|_| Error::Syntax {
                position: start,
                message: "degree out of range".into(),
            })?;
            self.expect(b')')?;
            self.expect(b'*')?;
        }
        let radial = if self.eat(b'(') {
            let r = self.radial()?;
            self.expect(b')')?;
            r
        } else {
            self.radial()?
        };
        Ok(QHSymbol::new(degree, radial))
    }

    fn radial(&mut self) -> Result<RadialSymbol> {
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            let neg = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => break,
            };
            first = false;
            let mut t = self.term()?;
            if neg {
                t.coeff = -t.coeff;
            }
            terms.push(t);
        }
        RadialSymbol::new(terms)
    }

    fn term(&mut self) -> Result<RadialTerm> {
        match self.peek() {
            Some(b'r') => self.mono(Rational::one()),
            Some(c) if c.is_ascii_digit() => {
                let c = self.unsigned_rational()?;
                if self.eat(b'*') {
                    if self.peek() != Some(b'r') {
                        return Err(self.error("expected 'r^(' after '*'"));
                    }
                    self.mono(c)
                } else {
                    Ok(RadialTerm {
                        coeff: c,
                        exponent: Rational::zero(),
                        log_power: 0,
                    })
                }
            }
            _ => Err(self.error("expected a term")),
        }
    }

    fn mono(&mut self, coeff: Rational) -> Result<RadialTerm> {
        self.expect(b'r')?;
        self.expect(b'^')?;
        self.expect(b'(')?;
        let start = self.pos;
        let exponent = self.signed_rational()?;
        self.expect(b')')?;
        let mut log_power = 0;
        let save = self.pos;
        if self.eat(b'*') {
            if self.eat(b'L') {
                self.expect(b'^')?;
                let l = self.unsigned_integer()?;
                log_power = u32::try_from(l).map_err(|_| self.error("log power out of range"))?;
            } else {
                self.pos = save;
                return Err(self.error("expected 'L^' after '*'"));
            }
        }
        RadialTerm::new(coeff, exponent, log_power).map_err(|e| match e {
            Error::InadmissibleExponent { .. } => e,
            _ => Error::Syntax {
                position: start,
                message: e.to_string(),
            },
        })
    }

    fn unsigned_integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digit run parses"))
    }

    fn signed_integer(&mut self) -> Result<BigInt> {
        let neg = self.eat(b'-');
        let n = self.unsigned_integer()?;
        Ok(if neg { -n } else { n })
    }

    fn finish_rational(&mut self, num: BigInt) -> Result<Rational> {
        if self.eat(b'/') {
            let den = self.unsigned_integer()?;
            if den.is_zero() {
                return Err(self.error("zero denominator"));
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    fn unsigned_rational(&mut self) -> Result<Rational> {
        let n = self.unsigned_integer()?;
        self.finish_rational(n)
    }

    fn signed_rational(&mut self) -> Result<Rational> {
        let n = self.signed_integer()?;
        self.finish_rational(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, rat_int};

    #[test]
    fn degree_and_monomial() {
        let s = parse_symbol("E(1) * r^(-1)").unwrap();
        assert_eq!(s.degree, 1);
        assert_eq!(s.radial, RadialSymbol::power(-1).unwrap());

        let s = parse_symbol("E(-1) * r^(3)").unwrap();
        assert_eq!(s.degree, -1);
        assert_eq!(s.radial, RadialSymbol::power(3).unwrap());
    }

    #[test]
    fn radial_sum() {
        let s = parse_symbol("2*r^(-1) - r^(1)").unwrap();
        assert_eq!(s.degree, 0);
        assert_eq!(s.radial.coefficient_of(&rat_int(-1)), rat_int(2));
        assert_eq!(s.radial.coefficient_of(&rat_int(1)), rat_int(-1));
    }

    #[test]
    fn parenthesised_radial_and_logs() {
        let s = parse_symbol("E(1)*(2*r^(-1) - r^(1))").unwrap();
        assert_eq!(s.to_string(), "E(1)*(2*r^(-1) - r^(1))");
        let s = parse_symbol(" -3/2 * r^(-1/2) * L^2 + 1 ").unwrap();
        assert_eq!(s.radial.terms()[0].coeff, rat(-3, 2));
        assert_eq!(s.radial.terms()[0].log_power, 2);
        assert_eq!(s.radial.terms()[1].exponent, rat_int(0));
    }

    #[test]
    fn errors_carry_positions() {
        match parse_symbol("2*r^(1) +") {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 9),
            other => panic!("{other:?}"),
        }
        match parse_symbol("E(1) r^(1)") {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 5),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_symbol("r^(-2)"),
            Err(Error::InadmissibleExponent { .. })
        ));
        assert!(parse_symbol("r^(1/0)").is_err());
        assert!(parse_symbol("").is_err());
    }

    #[test]
    fn zero_symbol() {
        let s = parse_symbol("0").unwrap();
        assert!(s.radial.is_zero());
        assert_eq!(s.to_string(), "0");
    }
}
