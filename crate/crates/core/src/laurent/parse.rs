use num_bigint::BigInt;
use num_rational::BigRational;

use super::{quantum_int, LaurentPoly};
use crate::error::{Error, Result};

/// Parses the human Laurent syntax used on the command line.
///
/// Accepted: integers and fractions (`3`, `1/2`), the variable `z` with an
/// optional signed exponent (`z^-2`), quantum integers `[r]_z` (`_q` or a
/// bare `[r]` also accepted), parentheses, `+`, `-`, `*` and juxtaposition
/// (`2z^3`), and nonnegative powers of any factor (`(z+1)^3`).
pub fn parse_laurent(input: &str) -> Result<LaurentPoly> {
    let chars: Vec<char> = input.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut parser = Parser { chars, pos: 0 };
    let f = parser.expr()?;
    if parser.pos != parser.chars.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(f)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error(&self, msg: &str) -> Error {
        let seen: String = self.chars.iter().collect();
        Error::Parse(format!("{msg} at position {} in {seen:?}", self.pos))
    }

    fn expr(&mut self) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::zero();
        let mut first = true;
        loop {
            let negate = if self.eat('-') {
                true
            } else {
                if !self.eat('+') && !first {
                    break;
                }
                false
            };
            let t = self.term()?;
            if negate {
                acc -= &t;
            } else {
                acc += &t;
            }
            first = false;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.factor()?;
                continue;
            }
            match self.peek() {
                Some(c) if c == 'z' || c == '[' || c == '(' || c.is_ascii_digit() => {
                    acc = &acc * &self.factor()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<LaurentPoly> {
        let is_var = self.peek() == Some('z');
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let e = self.signed_int()?;
        if is_var {
            return Ok(LaurentPoly::z_pow(e));
        }
        if e < 0 {
            return Err(self.error("negative powers are only allowed on z"));
        }
        Ok(base.pow(e as u32))
    }

    fn atom(&mut self) -> Result<LaurentPoly> {
        match self.peek() {
            Some('z') => {
                self.pos += 1;
                Ok(LaurentPoly::z_pow(1))
            }
            Some('(') => {
                self.pos += 1;
                let f = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(f)
            }
            Some('[') => {
                self.pos += 1;
                let r = self.signed_int()?;
                if !self.eat(']') {
                    return Err(self.error("expected ']'"));
                }
                if self.eat('_') && !(self.eat('z') || self.eat('q')) {
                    return Err(self.error("expected z or q after '_'"));
                }
                Ok(quantum_int(r))
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits()?;
                let den =
                    if self.peek() == Some('/') && self.chars.get(self.pos + 1).is_some_and(|c| c.is_ascii_digit()) {
                        self.pos += 1;
                        self.digits()?
                    } else {
                        BigInt::from(1)
                    };
                if den == BigInt::from(0) {
                    return Err(self.error("zero denominator"));
                }
                Ok(LaurentPoly::constant(BigRational::new(num, den)))
            }
            _ => Err(self.error("expected a number, z, [r]_z or '('")),
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.error("expected digits"))
    }

    fn signed_int(&mut self) -> Result<i64> {
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let d = self.digits()?;
        let v = i64::try_from(d).map_err(|_| self.error("integer out of range"))?;
        Ok(if neg { -v } else { v })
    }
}
