//! Text parser for polynomial expressions.
//!
//! Grammar (whitespace ignored, UTF-8):
//!
//! ```text
//! expr   := [sign] term { ('+' | '-') term }
//! term   := factor { '*' factor }
//! factor := base [ '^' uint ]
//! base   := uint | variable | '(' expr ')'
//! ```
//!
//! Integers may be arbitrarily large; variables must belong to the ring;
//! implicit multiplication is not allowed.

use crate::coeff::{Coeff, FieldMode};
use crate::poly::{Polynomial, RingSpec};
use crate::{Error, Result};
use num::{BigInt, BigRational, Num};
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src, bytes: src.as_bytes(), pos: 0 }
    }

    fn next_token(&mut self) -> Result<Option<(usize, Token)>> {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if self.pos >= self.bytes.len() {
            return Ok(None);
        }
        let start = self.pos;
        let c = self.bytes[self.pos];
        let tok = match c {
            b'+' => Token::Plus,
            b'-' => Token::Minus,
            b'*' => Token::Star,
            b'^' => Token::Caret,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b'0'..=b'9' => {
                let mut end = self.pos;
                while end < self.bytes.len() && self.bytes[end].is_ascii_digit() {
                    end += 1;
                }
                let t = Token::Int(self.src[start..end].to_string());
                self.pos = end;
                return Ok(Some((start, t)));
            }
            c if c.is_ascii_alphabetic() => {
                let mut end = self.pos;
                while end < self.bytes.len()
                    && (self.bytes[end].is_ascii_alphanumeric() || self.bytes[end] == b'_')
                {
                    end += 1;
                }
                let t = Token::Ident(self.src[start..end].to_string());
                self.pos = end;
                return Ok(Some((start, t)));
            }
            _ => {
                return Err(Error::Parse {
                    pos: start,
                    msg: format!("unexpected character `{}`", &self.src[start..start + 1]),
                })
            }
        };
        self.pos += 1;
        Ok(Some((start, tok)))
    }
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    cursor: usize,
    ring: Arc<RingSpec>,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&(usize, Token)> {
        self.tokens.get(self.cursor)
    }

    fn advance(&mut self) -> Option<(usize, Token)> {
        let t = self.tokens.get(self.cursor).cloned();
        if t.is_some() {
            self.cursor += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        if let Some((_, tok)) = self.peek() {
            match tok {
                Token::Minus => {
                    negate = true;
                    self.advance();
                }
                Token::Plus => {
                    self.advance();
                }
                _ => {}
            }
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        while let Some((_, tok)) = self.peek() {
            match tok {
                Token::Plus => {
                    self.advance();
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Token::Minus => {
                    self.advance();
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some((_, Token::Star))) {
            self.advance();
            let f = self.factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        if matches!(self.peek(), Some((_, Token::Caret))) {
            self.advance();
            let (pos, tok) = self.advance().ok_or(Error::Parse {
                pos: self.end,
                msg: "expected exponent after `^`".into(),
            })?;
            let Token::Int(digits) = tok else {
                return Err(Error::Parse { pos, msg: "exponent must be a nonnegative integer".into() });
            };
            let e: u32 = digits
                .parse()
                .map_err(|_| Error::Parse { pos, msg: format!("exponent `{digits}` too large") })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Polynomial> {
        let (pos, tok) = self.advance().ok_or(Error::Parse {
            pos: self.end,
            msg: "unexpected end of input".into(),
        })?;
        match tok {
            Token::Int(digits) => {
                let c = coeff_from_decimal(&digits, &self.ring.field());
                Ok(Polynomial::constant(self.ring.clone(), c))
            }
            Token::Ident(name) => match self.ring.var_index(&name) {
                Some(i) => Ok(Polynomial::variable(self.ring.clone(), i)),
                None => Err(Error::Parse { pos, msg: format!("unknown variable `{name}`") }),
            },
            Token::LParen => {
                let inner = self.expr()?;
                match self.advance() {
                    Some((_, Token::RParen)) => Ok(inner),
                    Some((p, _)) => Err(Error::Parse { pos: p, msg: "expected `)`".into() }),
                    None => Err(Error::Parse { pos: self.end, msg: "unclosed `(`".into() }),
                }
            }
            _ => Err(Error::Parse { pos, msg: "expected integer, variable, or `(`".into() }),
        }
    }
}

fn coeff_from_decimal(digits: &str, mode: &FieldMode) -> Coeff {
    match mode {
        FieldMode::Rational => {
            let n = BigInt::from_str_radix(digits, 10).expect("lexer produced digits");
            Coeff::Q(BigRational::from_integer(n))
        }
        FieldMode::Prime(p) => {
            let mut acc: u64 = 0;
            for b in digits.bytes() {
                acc = ((acc as u128 * 10 + (b - b'0') as u128) % *p as u128) as u64;
            }
            Coeff::Fp { v: acc, p: *p }
        }
    }
}

/// Parses an expression into the canonical sorted-term polynomial.
/// Parsing, printing, and parsing again is the identity.
pub fn parse_polynomial(text: &str, ring: &Arc<RingSpec>) -> Result<Polynomial> {
    let mut lexer = Lexer::new(text);
    let mut tokens = Vec::new();
    while let Some(t) = lexer.next_token()? {
        tokens.push(t);
    }
    let mut parser = Parser { tokens, cursor: 0, ring: ring.clone(), end: text.len() };
    let poly = parser.expr()?;
    if let Some((pos, _)) = parser.peek() {
        return Err(Error::Parse { pos: *pos, msg: "expected `+`, `-`, `*`, or `^`".into() });
    }
    Ok(poly)
}

/// Parses a rational number written as `p`, `-p`, or `p/q`.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let s = text.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str_radix(num, 10)
        .map_err(|_| Error::Parse { pos: 0, msg: format!("invalid rational `{text}`") })?;
    let d = BigInt::from_str_radix(den, 10)
        .map_err(|_| Error::Parse { pos: 0, msg: format!("invalid rational `{text}`") })?;
    if d == BigInt::from(0) {
        return Err(Error::Parse { pos: 0, msg: "zero denominator".into() });
    }
    Ok(BigRational::new(n, d))
}
