//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' exponent)?
//! atom   := integer ('/' integer)? | identifier | '(' expr ')'
//! exponent := integer | '(' ['-'] integer ['/' integer] ')'
//! ```
//!
//! Positions in errors are 1-based character columns.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::{context, Context, PolyError, Polynomial};
use crate::rational::Q;

pub fn parse_polynomial<S: AsRef<str>>(text: &str, variables: &[S]) -> Result<Polynomial, PolyError> {
    parse_in_context(text, context(variables))
}

pub(crate) fn parse_in_context(text: &str, vars: Context) -> Result<Polynomial, PolyError> {
    let mut parser = Parser { chars: text.chars().collect(), pos: 0, vars };
    parser.skip_ws();
    if parser.at_end() {
        return Err(parser.syntax("empty expression"));
    }
    let p = parser.expr()?;
    parser.skip_ws();
    if !parser.at_end() {
        return Err(parser.syntax(&format!("unexpected `{}`", parser.chars[parser.pos])));
    }
    Ok(p)
}

impl Polynomial {
    /// Parses `text` in this polynomial's variable context.
    pub fn parse_like(&self, text: &str) -> Result<Polynomial, PolyError> {
        parse_in_context(text, self.vars.clone())
    }

    pub fn parse_in(vars: &Context, text: &str) -> Result<Polynomial, PolyError> {
        parse_in_context(text, vars.clone())
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    vars: Context,
}

impl Parser {
    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn column(&self) -> usize {
        self.pos + 1
    }

    fn syntax(&self, message: &str) -> PolyError {
        PolyError::Syntax { position: self.column(), message: message.to_string() }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                let rhs = self.term()?;
                acc = &acc + &rhs;
            } else if self.eat('-') {
                let rhs = self.term()?;
                acc = &acc - &rhs;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.unary()?;
        while self.eat('*') {
            let rhs = self.unary()?;
            acc = &acc * &rhs;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial, PolyError> {
        if self.eat('-') {
            let inner = self.unary()?;
            return Ok(-&inner);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial, PolyError> {
        let base = self.atom()?;
        if self.eat('^') {
            let exp = self.exponent()?;
            self.skip_ws();
            if self.peek() == Some('^') {
                return Err(self.syntax("chained `^` is ambiguous; use parentheses"));
            }
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<u32, PolyError> {
        self.skip_ws();
        let start = self.column();
        if self.eat('(') {
            let negative = self.eat('-');
            self.skip_ws();
            let value = self.integer()?;
            let fractional = if self.eat('/') {
                self.skip_ws();
                let den = self.integer()?;
                !(den == BigInt::from(1))
            } else {
                false
            };
            if !self.eat(')') {
                return Err(self.syntax("expected `)` after exponent"));
            }
            if negative && !value.is_zero() {
                return Err(PolyError::NegativeExponent { position: start });
            }
            if fractional {
                return Err(PolyError::FractionalExponent { position: start });
            }
            return value.to_u32().ok_or_else(|| self.syntax("exponent too large"));
        }
        if self.peek() == Some('-') {
            return Err(PolyError::NegativeExponent { position: start });
        }
        let value = self.integer()?;
        self.skip_ws();
        if self.peek() == Some('/') || self.peek() == Some('.') {
            return Err(PolyError::FractionalExponent { position: start });
        }
        value.to_u32().ok_or_else(|| self.syntax("exponent too large"))
    }

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax("expected an integer"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        Ok(digits.parse().expect("digit run parses"))
    }

    fn atom(&mut self) -> Result<Polynomial, PolyError> {
        self.skip_ws();
        match self.peek() {
            None => Err(self.syntax("unexpected end of expression")),
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.syntax("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let value = if self.eat('/') {
                    self.skip_ws();
                    let den = self.integer()?;
                    if den.is_zero() {
                        return Err(self.syntax("division by zero in literal"));
                    }
                    Q::new(num, den)
                } else {
                    Q::from_integer(num)
                };
                Ok(Polynomial::constant(self.vars.clone(), value))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                match self.vars.iter().position(|v| *v == name) {
                    Some(index) => Ok(Polynomial::variable(self.vars.clone(), index)),
                    None => Err(PolyError::UnknownVariable { name, position: start + 1 }),
                }
            }
            Some(c) => Err(self.syntax(&format!("unexpected `{c}`"))),
        }
    }
}
