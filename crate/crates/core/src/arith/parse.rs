//! Polynomial text format.
//!
//! Accepted grammar (whitespace is ignored, multiplication may be implicit):
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (['*'|'/'] factor)*
//! factor := ('+'|'-') factor | power
//! power  := atom ['^' uint]
//! atom   := uint | 'x' | 'X' | 'sqrt' '(' uint ')' | 'sqrt' uint | '(' expr ')'
//! ```
//!
//! Division is only allowed by nonzero constants. `sqrt(n)` must lie in
//! the coefficient field: over `Q` only perfect squares are accepted, over
//! `Q(√d)` any `n = s²·d` or `n = s²`.
//!
//! The canonical printed form lists terms in descending powers, e.g.
//! `x^3 - 3x + 3`; over `Q(√d)` the irrational part of each coefficient is
//! printed as its own term, e.g. `x^3 - 3x + 3 + sqrt(3)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Field, Poly, QuadFieldElem, QuadraticField, Rational, RationalField};

/// Limits that keep parsing cheap on hostile input.
pub const MAX_INPUT_LEN: usize = 4096;
pub const MAX_EXPONENT: u32 = 64;
pub const MAX_DEGREE: usize = 256;
pub const MAX_DIGITS: usize = 400;
const MAX_NESTING: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at position {pos}: {kind}")]
pub struct ParseError {
    pub pos: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("expected {0}")]
    Expected(&'static str),
    #[error("empty input")]
    Empty,
    #[error("input longer than {MAX_INPUT_LEN} bytes")]
    TooLong,
    #[error("number literal longer than {MAX_DIGITS} digits")]
    NumberTooLong,
    #[error("exponent above {MAX_EXPONENT}")]
    ExponentTooLarge,
    #[error("degree above {MAX_DEGREE}")]
    DegreeTooLarge,
    #[error("division by a non-constant or zero expression")]
    BadDivisor,
    #[error("sqrt({0}) does not lie in the coefficient field")]
    SqrtNotInField(String),
    #[error("expression nested too deeply")]
    TooDeep,
}

pub fn parse_poly_rational(src: &str) -> Result<Poly<Rational>, ParseError> {
    parse_poly(src, RationalField)
}

pub fn parse_poly_quadratic(
    src: &str,
    field: QuadraticField,
) -> Result<Poly<QuadFieldElem>, ParseError> {
    parse_poly(src, field)
}

pub fn parse_poly<K: Field>(src: &str, tag: K::Tag) -> Result<Poly<K>, ParseError> {
    if src.len() > MAX_INPUT_LEN {
        return Err(ParseError {
            pos: MAX_INPUT_LEN,
            kind: ParseErrorKind::TooLong,
        });
    }
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
        tag,
        depth: 0,
    };
    p.skip_ws();
    if p.pos == p.src.len() {
        return Err(p.err(ParseErrorKind::Empty));
    }
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        let c = p.src[p.pos] as char;
        return Err(p.err(ParseErrorKind::UnexpectedChar(c)));
    }
    Ok(poly)
}

struct Parser<'a, K: Field> {
    src: &'a [u8],
    pos: usize,
    tag: K::Tag,
    depth: usize,
}

impl<K: Field> Parser<'_, K> {
    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            pos: self.pos,
            kind,
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

    fn starts_atom(&mut self) -> bool {
        match self.peek() {
            Some(c) => c.is_ascii_digit() || c == b'x' || c == b'X' || c == b'(' || self.at_sqrt(),
            None => false,
        }
    }

    fn at_sqrt(&self) -> bool {
        self.src[self.pos..].starts_with(b"sqrt")
    }

    fn check_degree(&self, p: &Poly<K>, at: usize) -> Result<(), ParseError> {
        if p.deg() > MAX_DEGREE {
            return Err(ParseError {
                pos: at,
                kind: ParseErrorKind::DegreeTooLarge,
            });
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Poly<K>, ParseError> {
        self.depth += 1;
        if self.depth > MAX_NESTING {
            return Err(self.err(ParseErrorKind::TooDeep));
        }
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => break,
            }
        }
        self.depth -= 1;
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly<K>, ParseError> {
        let start = self.pos;
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let f = self.factor()?;
                    if f.is_zero() || !f.is_constant() {
                        return Err(ParseError {
                            pos: at,
                            kind: ParseErrorKind::BadDivisor,
                        });
                    }
                    acc = acc.scale(&f.lead().inv());
                }
                _ if self.starts_atom() => {
                    let f = self.power()?;
                    acc = &acc * &f;
                }
                _ => break,
            }
            self.check_degree(&acc, start)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly<K>, ParseError> {
        self.depth += 1;
        if self.depth > MAX_NESTING {
            return Err(self.err(ParseErrorKind::TooDeep));
        }
        let out = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -&self.factor()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.factor()?
            }
            _ => self.power()?,
        };
        self.depth -= 1;
        Ok(out)
    }

    fn power(&mut self) -> Result<Poly<K>, ParseError> {
        let start = self.pos;
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            let e = self.uint()?;
            let e: u32 = match u32::try_from(&e) {
                Ok(e) if e <= MAX_EXPONENT => e,
                _ => {
                    return Err(ParseError {
                        pos: at,
                        kind: ParseErrorKind::ExponentTooLarge,
                    })
                }
            };
            if base.deg() * e as usize > MAX_DEGREE {
                return Err(ParseError {
                    pos: start,
                    kind: ParseErrorKind::DegreeTooLarge,
                });
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly<K>, ParseError> {
        match self.peek() {
            None => Err(self.err(ParseErrorKind::UnexpectedEnd)),
            Some(c) if c.is_ascii_digit() => {
                let n = self.uint()?;
                Ok(Poly::constant(K::from_rational(
                    self.tag,
                    Rational::from_integer(n),
                )))
            }
            Some(b'x') | Some(b'X') => {
                self.pos += 1;
                Ok(Poly::x(self.tag))
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err(ParseErrorKind::Expected("')'")));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(_) if self.at_sqrt() => {
                let start = self.pos;
                self.pos += 4;
                let n = if self.peek() == Some(b'(') {
                    self.pos += 1;
                    self.skip_ws();
                    let n = self.uint()?;
                    if self.peek() != Some(b')') {
                        return Err(self.err(ParseErrorKind::Expected("')'")));
                    }
                    self.pos += 1;
                    n
                } else {
                    self.skip_ws();
                    self.uint()?
                };
                match K::sqrt_of_integer(self.tag, &n) {
                    Some(v) => Ok(Poly::constant(v)),
                    None => Err(ParseError {
                        pos: start,
                        kind: ParseErrorKind::SqrtNotInField(n.to_string()),
                    }),
                }
            }
            Some(c) => Err(self.err(ParseErrorKind::UnexpectedChar(c as char))),
        }
    }

    fn uint(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(match self.src.get(self.pos) {
                Some(&c) => self.err(ParseErrorKind::UnexpectedChar(c as char)),
                None => self.err(ParseErrorKind::Expected("a number")),
            });
        }
        if self.pos - start > MAX_DIGITS {
            return Err(ParseError {
                pos: start,
                kind: ParseErrorKind::NumberTooLong,
            });
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("ascii digits parse"))
    }
}

/// Canonical text rendering; implemented per coefficient field.
pub trait DisplayTerms {
    fn write_terms(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result;
}

fn monomial(k: usize) -> String {
    match k {
        0 => String::new(),
        1 => "x".to_string(),
        _ => format!("x^{k}"),
    }
}

/// `(coefficient magnitude text, is the magnitude exactly one)`.
fn magnitude(c: &Rational) -> (String, bool) {
    let a = c.abs();
    if a.is_one() {
        return (String::new(), true);
    }
    if a.is_integer() {
        (a.to_string(), false)
    } else {
        (format!("({a})"), false)
    }
}

struct Term {
    negative: bool,
    body: String,
}

fn rational_term(c: &Rational, k: usize) -> Term {
    let (mag, unit) = magnitude(c);
    let body = if k == 0 {
        c.abs().to_string()
    } else if unit {
        monomial(k)
    } else {
        format!("{mag}{}", monomial(k))
    };
    Term {
        negative: c.is_negative(),
        body,
    }
}

fn sqrt_term(b: &Rational, d: u64, k: usize) -> Term {
    let (mag, _) = magnitude(b);
    Term {
        negative: b.is_negative(),
        body: format!("{mag}sqrt({d}){}", monomial(k)),
    }
}

fn write_joined(f: &mut fmt::Formatter<'_>, terms: &[Term]) -> fmt::Result {
    if terms.is_empty() {
        return f.write_str("0");
    }
    for (i, t) in terms.iter().enumerate() {
        match (i, t.negative) {
            (0, true) => write!(f, "-{}", t.body)?,
            (0, false) => f.write_str(&t.body)?,
            (_, true) => write!(f, " - {}", t.body)?,
            (_, false) => write!(f, " + {}", t.body)?,
        }
    }
    Ok(())
}

impl DisplayTerms for Poly<Rational> {
    fn write_terms(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<Term> = self
            .coeffs()
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| rational_term(c, k))
            .collect();
        write_joined(f, &terms)
    }
}

impl DisplayTerms for Poly<QuadFieldElem> {
    fn write_terms(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.tag().d();
        let mut terms = Vec::new();
        for (k, c) in self.coeffs().iter().enumerate().rev() {
            if !c.rational_part().is_zero() {
                terms.push(rational_term(c.rational_part(), k));
            }
            if !c.sqrt_part().is_zero() {
                terms.push(sqrt_term(c.sqrt_part(), d, k));
            }
        }
        write_joined(f, &terms)
    }
}
