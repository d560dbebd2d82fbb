//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' INTEGER)?
//! atom   := INTEGER ('/' INTEGER)? | VARIABLE | '(' expr ')'
//! ```
//!
//! Implicit multiplication is not accepted, and `/` may only appear inside a
//! rational literal.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::exact_poly::{BiPoly, MPoly, Poly, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    /// Byte offset into the input.
    pub offset: usize,
    pub message: String,
    pub expected: Vec<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at offset {}: {}", self.offset, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected one of: {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Number(Rat),
    Var(usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    pub fn expand<const N: usize>(&self) -> Poly<N> {
        match self {
            Expr::Number(c) => Poly::constant(c.clone()),
            Expr::Var(i) => Poly::var(*i),
            Expr::Neg(e) => -e.expand::<N>(),
            Expr::Add(a, b) => &a.expand::<N>() + &b.expand::<N>(),
            Expr::Sub(a, b) => &a.expand::<N>() - &b.expand::<N>(),
            Expr::Mul(a, b) => &a.expand::<N>() * &b.expand::<N>(),
            Expr::Pow(e, k) => e.expand::<N>().pow(*k),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer {n}"),
            Tok::Ident(s) => format!("identifier '{s}'"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Int(text[start..i].parse().unwrap()), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap();
                return Err(ParseError {
                    offset: start,
                    message: format!("unexpected character '{ch}'"),
                    expected: Vec::new(),
                });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    vars: &'a [&'a str],
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, message: impl Into<String>, expected: &[&str]) -> ParseError {
        ParseError {
            offset: self.offset(),
            message: message.into(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn atom_expected(&self) -> Vec<String> {
        let mut e = vec!["integer".to_string(), "'('".to_string(), "'-'".to_string()];
        e.extend(self.vars.iter().map(|v| format!("'{v}'")));
        e
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Tok::Slash => {
                    return Err(self.error("division is only allowed inside a rational literal a/b", &[]));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        match self.peek().clone() {
            Tok::Int(n) => {
                let k = n.to_u32().ok_or_else(|| self.error("exponent too large", &[]))?;
                self.bump();
                Ok(Expr::Pow(Box::new(base), k))
            }
            other => Err(self.error(
                format!("exponent must be a nonnegative integer literal, found {}", other.describe()),
                &["integer"],
            )),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                if *self.peek() != Tok::Slash {
                    return Ok(Expr::Number(Rat::from_integer(n)));
                }
                self.bump();
                match self.peek().clone() {
                    Tok::Int(d) if !d.is_zero() => {
                        self.bump();
                        Ok(Expr::Number(Rat::new(n, d)))
                    }
                    Tok::Int(_) => Err(self.error("zero denominator", &[])),
                    other => Err(self.error(
                        format!("division is only allowed inside a rational literal a/b, found {}", other.describe()),
                        &["integer"],
                    )),
                }
            }
            Tok::Ident(name) => match self.vars.iter().position(|v| *v == name) {
                Some(i) => {
                    self.bump();
                    Ok(Expr::Var(i))
                }
                None => {
                    let expected: Vec<&str> = self.vars.to_vec();
                    Err(self.error(format!("unknown variable '{name}'"), &expected))
                }
            },
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.error(format!("unclosed parenthesis, found {}", self.peek().describe()), &["')'"]));
                }
                self.bump();
                Ok(e)
            }
            other => {
                let expected = self.atom_expected();
                Err(ParseError { offset: self.offset(), message: format!("unexpected {}", other.describe()), expected })
            }
        }
    }
}

/// Parses `text` into an expression tree over the given variables.
pub fn parse_expr(text: &str, vars: &[&str]) -> Result<Expr, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, vars };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error(
            format!("unexpected {} (implicit multiplication is not supported)", p.peek().describe()),
            &["'+'", "'-'", "'*'", "'^'", "end of input"],
        ));
    }
    Ok(e)
}

pub fn parse_poly_in<const N: usize>(text: &str, vars: [&str; N]) -> Result<Poly<N>, ParseError> {
    Ok(parse_expr(text, &vars)?.expand())
}

/// Polynomial in `s, t`.
pub fn parse_poly(text: &str) -> Result<BiPoly, ParseError> {
    parse_poly_in(text, ["s", "t"])
}

/// Polynomial in `x, y, z, w`.
pub fn parse_mpoly(text: &str) -> Result<MPoly, ParseError> {
    parse_poly_in(text, ["x", "y", "z", "w"])
}
