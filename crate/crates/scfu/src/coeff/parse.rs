//! Recursive-descent parser for rational expressions in `q` and `t = q - 1`.
//!
//! Grammar: sums of products of powers of atoms, where an atom is an integer,
//! `q`, `t`, or a parenthesized expression. Juxtaposition such as `2q` or
//! `(q-1)(q+1)` is read as multiplication.

use super::rational::RationalQ;
use crate::error::{Result, ScfError};

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
}

fn err(msg: impl Into<String>) -> ScfError {
    ScfError::Parse(msg.into())
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.i).copied()
    }

    fn expr(&mut self) -> Result<RationalQ> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.i += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.i += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.i += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.i += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RationalQ> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.i += 1;
                    acc = &acc * &self.power()?;
                }
                Some(b'/') => {
                    self.i += 1;
                    acc = acc.checked_div(&self.power()?)?;
                }
                Some(c) if c == b'(' || c == b'q' || c == b't' || c.is_ascii_digit() => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<RationalQ> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.i += 1;
        let paren = self.peek() == Some(b'(');
        if paren {
            self.i += 1;
        }
        let neg = self.peek() == Some(b'-');
        if neg {
            self.i += 1;
        }
        let e = self.integer()?;
        if paren {
            self.expect(b')')?;
        }
        let e: i32 = e.try_into().map_err(|_| err("exponent too large"))?;
        base.pow(if neg { -e } else { e })
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        std::str::from_utf8(&self.s[start..self.i])
            .unwrap()
            .parse()
            .map_err(|_| err(format!("expected integer at offset {start}")))
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.i += 1;
            Ok(())
        } else {
            Err(err(format!("expected '{}' at offset {}", c as char, self.i)))
        }
    }

    fn atom(&mut self) -> Result<RationalQ> {
        match self.peek() {
            Some(b'(') => {
                self.i += 1;
                let v = self.expr()?;
                self.expect(b')')?;
                Ok(v)
            }
            Some(b'q') => {
                self.i += 1;
                Ok(RationalQ::q())
            }
            Some(b't') => {
                self.i += 1;
                Ok(RationalQ::t())
            }
            Some(c) if c.is_ascii_digit() => Ok(RationalQ::from_int(self.integer()?)),
            Some(c) => Err(err(format!("unexpected '{}' at offset {}", c as char, self.i))),
            None => Err(err("unexpected end of input")),
        }
    }
}

pub fn parse_rational(s: &str) -> Result<RationalQ> {
    let mut p = Parser { s: s.as_bytes(), i: 0 };
    let v = p.expr()?;
    if p.peek().is_some() {
        return Err(err(format!("trailing input at offset {}", p.i)));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        for s in ["q^3 - 2*q + 1", "(q-1)/q^2", "2/q^2", "1/(q-1)", "-q^2 + 3", "0", "(q+1)/2"] {
            assert_eq!(parse_rational(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn variables_and_juxtaposition() {
        assert_eq!(parse_rational("t").unwrap(), parse_rational("q - 1").unwrap());
        assert_eq!(parse_rational("2q(t+1)").unwrap(), parse_rational("2*q^2").unwrap());
        assert_eq!(parse_rational("q^-2").unwrap(), parse_rational("1/q^2").unwrap());
        assert_eq!(parse_rational("q^(-1)").unwrap(), RationalQ::monomial(1, -1));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rational("q +").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("(q").is_err());
    }
}
