//! Text form of integer polynomials.
//!
//! ```text
//! poly   := sum | csv
//! csv    := int ("," int)+          ascending coefficients
//! sum    := ["+"|"-"] term (("+"|"-") term)*
//! term   := factor ("*" factor)*
//! factor := base ("^" uint)?
//! base   := VAR | int | "(" sum ")"
//! ```
//!
//! A leading sign on `sum` is accepted in addition to the strict grammar.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::IntPoly;

const MAX_EXPONENT: u64 = 1 << 16;

/// Parse a polynomial in the variable `t`.
pub fn parse_poly(text: &str) -> Result<IntPoly> {
    parse_poly_var(text, 't')
}

/// Parse a polynomial in the given variable.
pub fn parse_poly_var(text: &str, var: char) -> Result<IntPoly> {
    if text.contains(',') {
        return parse_csv(text);
    }
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        var,
    };
    let out = p.sum()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.syntax(format!("unexpected '{}'", p.chars[p.pos])));
    }
    Ok(out)
}

fn parse_csv(text: &str) -> Result<IntPoly> {
    let mut offset = 0;
    let mut coeffs = Vec::new();
    for field in text.split(',') {
        let trimmed = field.trim();
        let lead = field.len() - field.trim_start().len();
        let value: BigInt = trimmed.parse().map_err(|_| Error::Syntax {
            pos: offset + lead,
            msg: format!("invalid integer '{trimmed}'"),
        })?;
        coeffs.push(value);
        offset += field.len() + 1;
    }
    Ok(IntPoly::new(coeffs))
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    var: char,
}

impl Parser {
    fn syntax(&self, msg: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn sum(&mut self) -> Result<IntPoly> {
        let mut negate = false;
        match self.peek() {
            Some('-') => {
                negate = true;
                self.pos += 1;
            }
            Some('+') => self.pos += 1,
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { -first } else { first };
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some('-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<IntPoly> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<IntPoly> {
        let base = self.base()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        match self.peek() {
            Some('-') => return Err(Error::NegativeExponent { pos: self.pos }),
            Some(c) if c.is_ascii_digit() => {}
            _ => return Err(self.syntax("expected exponent")),
        }
        let start = self.pos;
        let digits = self.digits();
        let e: u64 = digits
            .parse()
            .ok()
            .filter(|&e| e <= MAX_EXPONENT)
            .ok_or(Error::Syntax {
                pos: start,
                msg: format!("exponent '{digits}' too large"),
            })?;
        Ok(base.pow(e))
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn base(&mut self) -> Result<IntPoly> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.sum()?;
                if self.peek() != Some(')') {
                    return Err(self.syntax("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c == self.var => {
                self.pos += 1;
                Ok(IntPoly::x())
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits();
                let v: BigInt = d.parse().expect("ascii digits");
                Ok(if v.is_zero() {
                    IntPoly::zero()
                } else {
                    IntPoly::constant(v)
                })
            }
            Some(c) if c.is_alphabetic() => Err(Error::UnknownVariable {
                name: c,
                pos: self.pos,
                expected: self.var,
            }),
            Some(c) => Err(self.syntax(format!("unexpected '{c}'"))),
            None => Err(self.syntax("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(p: &IntPoly) -> Vec<i64> {
        p.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn expression_and_list_forms() {
        assert_eq!(coeffs(&parse_poly("t^3-1").unwrap()), vec![-1, 0, 0, 1]);
        assert_eq!(coeffs(&parse_poly("-1,0,0,1").unwrap()), vec![-1, 0, 0, 1]);
        assert_eq!(coeffs(&parse_poly("(t+1)^3-1").unwrap()), vec![0, 3, 3, 1]);
        assert_eq!(coeffs(&parse_poly(" 2 * t ^ 2 + (t - 3) ").unwrap()), vec![-3, 1, 2]);
        assert_eq!(coeffs(&parse_poly("-t+1").unwrap()), vec![1, -1]);
        assert!(parse_poly("0").unwrap().is_zero());
        assert_eq!(coeffs(&parse_poly_var("u^2+u+1", 'u').unwrap()), vec![1, 1, 1]);
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_poly("t^2+x").unwrap_err(),
            Error::UnknownVariable { name: 'x', pos: 4, expected: 't' }
        );
        assert_eq!(parse_poly("t^-2").unwrap_err(), Error::NegativeExponent { pos: 2 });
        assert!(matches!(parse_poly("t^").unwrap_err(), Error::Syntax { pos: 2, .. }));
        assert!(matches!(parse_poly("(t+1").unwrap_err(), Error::Syntax { pos: 4, .. }));
        assert!(matches!(parse_poly("t t").unwrap_err(), Error::Syntax { pos: 2, .. }));
        assert!(matches!(parse_poly("1,x,3").unwrap_err(), Error::Syntax { pos: 2, .. }));
    }
}
