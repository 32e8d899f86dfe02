//! Recursive-descent reader for expressions such as `st(2+3s) - (st)^2`.
//! Products may be implicit and the unicode minus sign is accepted.

use std::iter::Peekable;
use std::marker::PhantomData;
use std::str::Chars;

use num_bigint::BigInt;

use super::{Coeff, Poly};
use crate::error::{Error, Result};

struct Parser<'a, C> {
    chars: Peekable<Chars<'a>>,
    names: &'a [&'a str],
    src: &'a str,
    coeff: PhantomData<C>,
}

impl<'a, C: Coeff + From<BigInt>> Parser<'a, C> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} in '{}'", self.src))
    }

    fn skip_ws(&mut self) {
        while self.chars.peek().is_some_and(|c| c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.peek().copied().map(|c| if c == '\u{2212}' { '-' } else { c })
    }

    fn nvars(&self) -> usize {
        self.names.len()
    }

    fn expr(&mut self) -> Result<Poly<C>> {
        let mut acc = Poly::zero(self.nvars());
        let mut sign = match self.peek() {
            Some('-') => {
                self.chars.next();
                -1
            }
            Some('+') => {
                self.chars.next();
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            if sign < 0 {
                acc -= &t;
            } else {
                acc += &t;
            }
            match self.peek() {
                Some('+') => {
                    self.chars.next();
                    sign = 1;
                }
                Some('-') => {
                    self.chars.next();
                    sign = -1;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly<C>> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.chars.next();
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                Some(c) if c == '(' || c.is_ascii_alphanumeric() => {
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Poly<C>> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.chars.next();
            let n = self.integer()?;
            let n: u32 = n
                .try_into()
                .map_err(|_| self.err("exponent out of range"))?;
            return Ok(base.pow(n));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let mut s = String::new();
        while let Some(&c) = self.chars.peek() {
            if c.is_ascii_digit() {
                s.push(c);
                self.chars.next();
            } else {
                break;
            }
        }
        if s.is_empty() {
            return Err(self.err("expected an integer"));
        }
        Ok(s.parse().expect("digits parse"))
    }

    fn atom(&mut self) -> Result<Poly<C>> {
        match self.peek() {
            Some('(') => {
                self.chars.next();
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("unbalanced parenthesis"));
                }
                self.chars.next();
                Ok(e)
            }
            Some('-') => {
                self.chars.next();
                let f = self.factor()?;
                Ok(-f)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Poly::constant(self.nvars(), C::from(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                self.chars.next();
                let name = c.to_string();
                let idx = self
                    .names
                    .iter()
                    .position(|n| *n == name)
                    .ok_or_else(|| self.err(&format!("unknown variable '{name}'")))?;
                Ok(Poly::var(self.nvars(), idx))
            }
            _ => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parses a polynomial in the single-letter variables `names`.
pub fn parse_poly<C: Coeff + From<BigInt>>(src: &str, names: &[&str]) -> Result<Poly<C>> {
    let mut p = Parser {
        chars: src.chars().peekable(),
        names,
        src,
        coeff: PhantomData,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::IntPoly;

    #[test]
    fn nested_products() {
        let a: IntPoly = parse_poly("s^2-3s+1-t+st(2+3s)+(st)^2(-2-s)", &["s", "t"]).unwrap();
        let b: IntPoly = parse_poly("s^2 - 3s + 1 - t + 2st + 3s^2t - 2s^2t^2 - s^3t^2", &["s", "t"]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn unicode_minus_and_errors() {
        let a: IntPoly = parse_poly("1\u{2212}t", &["t"]).unwrap();
        assert_eq!(a.to_string(), "-x + 1");
        assert!(parse_poly::<BigInt>("1+z", &["t"]).is_err());
        assert!(parse_poly::<BigInt>("(1+t", &["t"]).is_err());
    }
}
