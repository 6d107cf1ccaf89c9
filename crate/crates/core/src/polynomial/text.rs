//! Canonical text form and parser.
//!
//! Terms are written in ascending total degree (ties: larger exponent on the
//! earliest variable first), joined by ` + ` / ` - `. A term is `C` or
//! `C*v1^e1*v2^e2...`; `^1` is omitted, and a coefficient of 1 is omitted
//! unless the term is constant. The parser accepts this form and, more
//! generally, sums of products with parentheses and integer powers.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{Monomial, Polynomial, Var};
use crate::error::{Result, SpkError};

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms: Vec<(&Monomial, &BigInt)> = self.terms().collect();
        terms.sort_by(|a, b| a.0.canonical_cmp(b.0));
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl FromStr for Polynomial {
    type Err = SpkError;

    fn from_str(s: &str) -> Result<Polynomial> {
        let mut p = Parser { src: s.as_bytes(), pos: 0 };
        let out = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(out)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> SpkError {
        SpkError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
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

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero();
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            Some(_) => 1,
            None => return Err(self.error("empty expression")),
        };
        loop {
            let t = self.term()?;
            if sign < 0 {
                acc = acc - t;
            } else {
                acc = acc + t;
            }
            match self.peek() {
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.power()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let start = self.pos;
        let e = self.integer()?;
        let e: u32 = e
            .try_into()
            .map_err(|_| SpkError::Parse {
                pos: start,
                msg: "exponent too large".into(),
            })?;
        if !neg {
            return Ok(base.pow(e));
        }
        match base.as_monomial() {
            Some((m, c)) if c.abs().is_one() => {
                let inv = Polynomial::term(c.clone(), m.inverse());
                Ok(inv.pow(e))
            }
            _ => Err(SpkError::Parse {
                pos: start,
                msg: "negative exponent on a non-monomial".into(),
            }),
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => Ok(Polynomial::constant(self.integer()?)),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos])
                    .expect("identifier bytes are ASCII");
                Ok(Polynomial::var(Var::new(name)?))
            }
            Some(_) => Err(self.error("expected a number, variable or `(`")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("digits are ASCII");
        Ok(digits.parse().expect("nonempty digit string"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::poly;

    #[test]
    fn serialize_examples() {
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(poly("x^2*y - 3").to_string(), "-3 + x^2*y");
        assert_eq!(poly("y + 1").to_string(), "1 + y");
        assert_eq!(poly("x^-2").to_string(), "x^-2");
        assert_eq!(
            poly("x*y^2*z^2 + x^2*y^2*z + x^2*y*z^2").to_string(),
            "x^2*y^2*z + x^2*y*z^2 + x*y^2*z^2"
        );
        assert_eq!(poly("-x").to_string(), "-x");
    }

    #[test]
    fn parse_general_forms() {
        assert_eq!(poly("(1+x)^2"), poly("1 + 2*x + x^2"));
        assert_eq!(poly("2*x*3"), poly("6*x"));
        assert_eq!(poly("-(x - y)"), poly("y - x"));
        assert_eq!(poly("(x*y)^-1"), poly("x^-1*y^-1"));
    }

    #[test]
    fn parse_errors_carry_position() {
        match "x + * y".parse::<Polynomial>() {
            Err(SpkError::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!("".parse::<Polynomial>().is_err());
        assert!("x y".parse::<Polynomial>().is_err());
        assert!("(1+x)^-1".parse::<Polynomial>().is_err());
        assert!("(x".parse::<Polynomial>().is_err());
    }
}
