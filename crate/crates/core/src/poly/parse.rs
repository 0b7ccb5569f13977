//! Text syntax for polynomials: integer literals, the main variable (`k` by
//! default), the parameter `z`, `+ - * / ^` and parentheses. Division is only
//! allowed by expressions free of the main variable.

use num_bigint::BigInt;

use super::{Field, FieldElement, Polynomial};
use crate::error::{Error, Result};

type Poly = Polynomial<FieldElement>;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    var: &'a str,
    end: usize,
}

fn err(column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        column,
        message: message.into(),
    }
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((Tok::Num(digits.parse().unwrap()), col));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Op(c), col));
            i += 1;
        } else {
            return Err(err(col, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn column(&self) -> usize {
        self.toks.get(self.pos).map(|(_, c)| *c).unwrap_or(self.end)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.peek() == Some(&Tok::Op('/')) {
                let col = self.column();
                self.pos += 1;
                let d = self.unary()?;
                match d.degree() {
                    None => return Err(err(col, "division by zero")),
                    Some(0) => acc = acc.scale(&(FieldElement::one() / &d.coeff(0))),
                    Some(_) => {
                        return Err(err(
                            col,
                            format!("division by an expression in `{}`", self.var),
                        ))
                    }
                }
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Poly> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.eat('^') {
            let col = self.column();
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n
                        .try_into()
                        .ok()
                        .filter(|&e: &u32| e <= 10_000)
                        .ok_or_else(|| err(col, "exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => Err(err(col, "expected a nonnegative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly> {
        let col = self.column();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Polynomial::constant(FieldElement::from(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if name == self.var {
                    Ok(Polynomial::x())
                } else if name == "z" {
                    Ok(Polynomial::constant(FieldElement::z()))
                } else {
                    Err(err(col, format!("unknown variable `{name}`")))
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(err(self.column(), "expected `)`"));
                }
                Ok(inner)
            }
            Some(Tok::Op(c)) => Err(err(col, format!("unexpected `{c}`"))),
            None => Err(err(col, "unexpected end of input")),
        }
    }
}

/// Parses a polynomial in `var` whose coefficients may involve `z`.
pub fn parse_poly_in(src: &str, var: &str) -> Result<Poly> {
    let toks = tokenize(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        var,
        end: src.chars().count() + 1,
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(err(p.column(), "trailing input"));
    }
    Ok(out)
}

/// Parses a polynomial in `k`.
pub fn parse_poly(src: &str) -> Result<Poly> {
    parse_poly_in(src, "k")
}
