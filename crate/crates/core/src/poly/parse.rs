//! Text front-end for polynomials.
//!
//! Grammar:
//!
//! ```text
//! expr     := ['+'|'-'] term (('+'|'-') term)*
//! term     := factor ('*'? factor)*      -- implicit product only before '('
//! factor   := base ('^' uint)?
//! base     := rational | var | '(' expr ')'
//! rational := int ('/' uint)?
//! ```
//!
//! Juxtaposition such as `2x` or `x y` is rejected; write `2*x`. A factor may
//! be followed directly by a parenthesised group, as in `2(x+y)`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use super::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedToken(String),
    UnexpectedEnd,
    UnknownIdentifier(String),
    NegativeExponent,
    ExponentTooLarge,
    ImplicitMultiplication,
    ZeroDenominator,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {}", describe(.kind))]
pub struct ParseError {
    pub kind: ParseErrorKind,
    /// Byte offset into the input.
    pub position: usize,
}

fn describe(kind: &ParseErrorKind) -> String {
    match kind {
        ParseErrorKind::UnexpectedChar(c) => format!("unexpected character {c:?}"),
        ParseErrorKind::UnexpectedToken(t) => format!("unexpected {t}"),
        ParseErrorKind::UnexpectedEnd => "unexpected end of input".into(),
        ParseErrorKind::UnknownIdentifier(id) => format!("unknown identifier {id:?}"),
        ParseErrorKind::NegativeExponent => "negative exponent".into(),
        ParseErrorKind::ExponentTooLarge => "exponent too large".into(),
        ParseErrorKind::ImplicitMultiplication => "implicit multiplication is not accepted; use '*'".into(),
        ParseErrorKind::ZeroDenominator => "zero denominator".into(),
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
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("number {n}"),
            Tok::Ident(s) => format!("identifier {s:?}"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = text[start..i].parse().expect("ascii digits");
            out.push((Tok::Int(n), start));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(text[start..i].to_string()), start));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => {
                let ch = text[start..].chars().next().unwrap_or(c);
                return Err(ParseError {
                    kind: ParseErrorKind::UnexpectedChar(ch),
                    position: start,
                });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    vars: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|&(_, p)| p).unwrap_or(self.end)
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            kind,
            position: self.offset(),
        }
    }

    fn unexpected(&self) -> ParseError {
        match self.peek() {
            Some(t) => self.err(ParseErrorKind::UnexpectedToken(t.describe())),
            None => self.err(ParseErrorKind::UnexpectedEnd),
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let n = self.vars.len();
        let mut acc = Polynomial::zero(n);
        let mut negate = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                true
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let t = self.term()?;
            acc = if negate { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some(Tok::Plus) => negate = false,
                Some(Tok::Minus) => negate = true,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                Some(Tok::LParen) => {
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                Some(Tok::Int(_)) | Some(Tok::Ident(_)) => {
                    return Err(self.err(ParseErrorKind::ImplicitMultiplication));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.base()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        match self.peek().cloned() {
            Some(Tok::Int(e)) => {
                let e: u32 = e.try_into().map_err(|_| self.err(ParseErrorKind::ExponentTooLarge))?;
                self.pos += 1;
                Ok(base.pow(e))
            }
            Some(Tok::Minus) => Err(self.err(ParseErrorKind::NegativeExponent)),
            _ => Err(self.unexpected()),
        }
    }

    fn base(&mut self) -> Result<Polynomial, ParseError> {
        let n = self.vars.len();
        match self.peek().cloned() {
            Some(Tok::Int(num)) => {
                self.pos += 1;
                let mut value = BigRational::from_integer(num);
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Tok::Int(den)) => {
                            if den.is_zero() {
                                return Err(self.err(ParseErrorKind::ZeroDenominator));
                            }
                            self.pos += 1;
                            value /= BigRational::from_integer(den);
                        }
                        _ => return Err(self.unexpected()),
                    }
                }
                Ok(Polynomial::constant(n, value))
            }
            Some(Tok::Ident(name)) => {
                let idx = self
                    .vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| self.err(ParseErrorKind::UnknownIdentifier(name.clone())))?;
                self.pos += 1;
                Ok(Polynomial::var(n, idx))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.unexpected());
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => Err(self.unexpected()),
        }
    }
}

/// Parses `text` as a polynomial in the given ordered variables and expands it.
pub fn parse_polynomial(text: &str, variables: &[String]) -> Result<Polynomial, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
        vars: variables,
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.unexpected());
    }
    Ok(out)
}

/// Parses an exact rational such as `-4/3`, `2` or `+1/2`.
pub fn parse_rational(text: &str) -> Result<BigRational, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
        vars: &[],
    };
    let sign = match p.peek() {
        Some(Tok::Minus) => {
            p.pos += 1;
            -BigRational::one()
        }
        Some(Tok::Plus) => {
            p.pos += 1;
            BigRational::one()
        }
        _ => BigRational::one(),
    };
    if !matches!(p.peek(), Some(Tok::Int(_))) {
        return Err(p.unexpected());
    }
    let value = p.base()?.coefficient(&super::Monomial::one(0));
    if p.pos != p.toks.len() {
        return Err(p.unexpected());
    }
    Ok(sign * value)
}

/// Sorted, deduplicated identifiers appearing in `text`.
pub fn detect_variables(text: &str) -> Result<Vec<String>, ParseError> {
    let set: BTreeSet<String> = tokenize(text)?
        .into_iter()
        .filter_map(|(t, _)| match t {
            Tok::Ident(s) => Some(s),
            _ => None,
        })
        .collect();
    Ok(set.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;

    fn xyz() -> Vec<String> {
        vec!["x".into(), "y".into(), "z".into()]
    }

    #[test]
    fn fermat_cubic() {
        let p = parse_polynomial("x^3+y^3+z^3", &xyz()).unwrap();
        assert_eq!(p.num_terms(), 3);
        for i in 0..3 {
            let mut e = vec![0; 3];
            e[i] = 3;
            assert_eq!(p.coefficient(&Monomial::new(e)), BigRational::one());
        }
    }

    #[test]
    fn zero_and_cancellation() {
        let z = parse_polynomial("0", &xyz()).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.nvars(), 3);
        let p = parse_polynomial("(x+y)^2 - x^2 - 2*x*y", &xyz()).unwrap();
        assert_eq!(p, Polynomial::var(3, 1).pow(2));
    }

    #[test]
    fn rationals_and_adjacency() {
        let p = parse_polynomial("1/2*x - 3/4", &xyz()).unwrap();
        assert_eq!(p.to_string_with(&xyz()), "1/2*x - 3/4");
        let q = parse_polynomial("2(x+y)(x-y)", &xyz()).unwrap();
        assert_eq!(q.to_string_with(&xyz()), "2*x^2 - 2*y^2");
        let r = parse_polynomial("-(x)^2 + +0", &xyz());
        assert!(r.is_err());
        let s = parse_polynomial("-x^2", &xyz()).unwrap();
        assert_eq!(s.to_string_with(&xyz()), "-x^2");
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_polynomial("x + w", &xyz()).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownIdentifier("w".into()));
        assert_eq!(e.position, 4);

        let e = parse_polynomial("x^-1", &xyz()).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::NegativeExponent);
        assert_eq!(e.position, 2);

        let e = parse_polynomial("2x", &xyz()).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::ImplicitMultiplication);
        assert_eq!(e.position, 1);

        let e = parse_polynomial("x y", &xyz()).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::ImplicitMultiplication);

        let e = parse_polynomial("(x+y", &xyz()).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnexpectedEnd);
        assert_eq!(e.position, 4);

        let e = parse_polynomial("x $ y", &xyz()).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnexpectedChar('$'));

        let e = parse_polynomial("x/0", &xyz()).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnexpectedToken("'/'".into()));

        let e = parse_polynomial("1/0", &xyz()).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::ZeroDenominator);

        assert!(parse_polynomial("", &xyz()).is_err());
        assert!(parse_polynomial("x^99999999999", &xyz()).is_err());
    }

    #[test]
    fn rational_literals() {
        assert_eq!(parse_rational("-4/3").unwrap(), BigRational::new((-4).into(), 3.into()));
        assert_eq!(parse_rational("2").unwrap(), BigRational::from_integer(2.into()));
        assert_eq!(parse_rational("6/4").unwrap(), BigRational::new(3.into(), 2.into()));
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/").is_err());
    }

    #[test]
    fn variable_detection() {
        assert_eq!(detect_variables("z^2 + x*y + y").unwrap(), vec!["x", "y", "z"]);
    }
}
