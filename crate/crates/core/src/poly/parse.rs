//! Text form of polynomials.
//!
//! ```text
//! poly    := ['-'] term (('+' | '-') term)*
//! term    := coeff ['*' factors] | factors
//! factors := varpow ('*' varpow)*
//! varpow  := 'x' INT ['^' INT]
//! coeff   := INT ['/' INT]
//! ```
//!
//! Whitespace is insignificant. Printing emits terms in descending canonical
//! order and omits the denominator of integer coefficients.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Monomial, MultiPoly, Rat};
use crate::error::{Error, Result};

/// How variables are spelled.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarStyle {
    /// `x1, x2, ...`
    Indexed,
    /// A single named variable such as `w`; the ring has one variable.
    Single(char),
}

/// Parses `text` as a polynomial in `x1, ..., xn`.
pub fn parse(text: &str, n: usize) -> Result<MultiPoly> {
    Parser::new(text, n, VarStyle::Indexed).poly()
}

/// Parses `text` as a one-variable polynomial spelled with `name`, e.g. `w^2 + 1`.
pub fn parse_named(text: &str, name: char) -> Result<MultiPoly> {
    Parser::new(text, 1, VarStyle::Single(name)).poly()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n: usize,
    style: VarStyle,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, n: usize, style: VarStyle) -> Self {
        Parser {
            src: text.as_bytes(),
            pos: 0,
            n,
            style,
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
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

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn small_int(&mut self, what: &str) -> Result<u32> {
        let start = self.pos;
        let s = self.digits()?;
        s.parse::<u32>().map_err(|_| Error::Syntax {
            pos: start,
            msg: format!("{what} too large"),
        })
    }

    fn poly(&mut self) -> Result<MultiPoly> {
        let mut acc = MultiPoly::zero(self.n);
        let mut negate = self.eat(b'-');
        loop {
            let (m, c) = self.term()?;
            acc.add_term(m, if negate { -c } else { c });
            if self.eat(b'+') {
                negate = false;
            } else if self.eat(b'-') {
                negate = true;
            } else {
                break;
            }
        }
        if self.peek().is_some() {
            return self.err("unexpected character");
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<(Monomial, Rat)> {
        match self.peek() {
            Some(b) if b.is_ascii_digit() => {
                let c = self.coeff()?;
                let m = if self.eat(b'*') {
                    self.factors()?
                } else {
                    Monomial::one(self.n)
                };
                Ok((m, c))
            }
            Some(_) => Ok((self.factors()?, Rat::one())),
            None => self.err("expected a term"),
        }
    }

    fn coeff(&mut self) -> Result<Rat> {
        let num: BigInt = self.digits()?.parse().expect("digits");
        if self.eat(b'/') {
            let at = self.pos;
            let den: BigInt = self.digits()?.parse().expect("digits");
            if den.is_zero() {
                return Err(Error::Syntax {
                    pos: at,
                    msg: "zero denominator".into(),
                });
            }
            Ok(Rat::new(num, den))
        } else {
            Ok(Rat::from_integer(num))
        }
    }

    fn factors(&mut self) -> Result<Monomial> {
        let mut m = self.varpow()?;
        while self.eat(b'*') {
            m = m.mul(&self.varpow()?);
        }
        Ok(m)
    }

    fn varpow(&mut self) -> Result<Monomial> {
        let start = self.pos;
        let idx = match self.style {
            VarStyle::Indexed => {
                if !self.eat(b'x') {
                    return self.err("expected a variable x<index>");
                }
                let i = self.small_int("variable index")? as usize;
                if i == 0 || i > self.n {
                    return Err(Error::VariableOutOfRange { index: i, n: self.n });
                }
                i - 1
            }
            VarStyle::Single(name) => {
                if !self.eat(name as u8) {
                    self.pos = start;
                    return self.err(format!("expected the variable {name}"));
                }
                0
            }
        };
        let e = if self.eat(b'^') { self.small_int("exponent")? } else { 1 };
        let mut m = Monomial::one(self.n);
        m.0[idx] = e;
        Ok(m)
    }
}

fn render_monomial(m: &Monomial, style: VarStyle) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        let name = match style {
            VarStyle::Indexed => format!("x{}", i + 1),
            VarStyle::Single(c) => c.to_string(),
        };
        if e == 1 {
            parts.push(name);
        } else {
            parts.push(format!("{name}^{e}"));
        }
    }
    parts.join("*")
}

pub(super) fn render(p: &MultiPoly, style: VarStyle) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().enumerate() {
        let neg = c.is_negative();
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let a = c.abs();
        if m.is_one() {
            out.push_str(&a.to_string());
        } else {
            if !a.is_one() {
                out.push_str(&a.to_string());
                out.push('*');
            }
            out.push_str(&render_monomial(m, style));
        }
    }
    out
}
