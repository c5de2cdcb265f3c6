//! Polynomial expression grammar.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' uint)?
//! atom   := number | ident | '(' expr ')'
//! number := uint ('/' uint)?
//! ident  := [a-zA-Z][a-zA-Z0-9_]*
//! ```
//!
//! Multiplication is always explicit, so `xy` is the single identifier
//! `xy`, never `x*y`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{PolyRing, Polynomial, Rational};

/// Largest exponent accepted on a multi-term base.
const MAX_EXPANSION_EXPONENT: u32 = 1000;
/// Nesting limit for parentheses and unary signs.
const MAX_DEPTH: usize = 256;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

impl std::fmt::Display for Tok {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Tok::Num(n) => write!(f, "`{n}`"),
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn tokens(src: &'a str) -> std::result::Result<Vec<(Tok, usize)>, (usize, String)> {
        let mut lx = Lexer { src, pos: 0 };
        let mut out = Vec::new();
        loop {
            let (t, at) = lx.next()?;
            let end = t == Tok::End;
            out.push((t, at));
            if end {
                return Ok(out);
            }
        }
    }

    fn next(&mut self) -> std::result::Result<(Tok, usize), (usize, String)> {
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        let start = self.pos;
        let Some(&b) = bytes.get(self.pos) else {
            return Ok((Tok::End, start));
        };
        let single = |t| Ok((t, start));
        match b {
            b'+' | b'-' | b'*' | b'^' | b'/' | b'(' | b')' => {
                self.pos += 1;
                single(match b {
                    b'+' => Tok::Plus,
                    b'-' => Tok::Minus,
                    b'*' => Tok::Star,
                    b'^' => Tok::Caret,
                    b'/' => Tok::Slash,
                    b'(' => Tok::LParen,
                    _ => Tok::RParen,
                })
            }
            b'0'..=b'9' => {
                while self.pos < bytes.len() && bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                if self.pos < bytes.len()
                    && (bytes[self.pos].is_ascii_alphabetic() || bytes[self.pos] == b'.')
                {
                    return Err((self.pos, "malformed number".into()));
                }
                let n: BigInt = self.src[start..self.pos].parse().expect("digits");
                Ok((Tok::Num(n), start))
            }
            c if c.is_ascii_alphabetic() => {
                while self.pos < bytes.len()
                    && (bytes[self.pos].is_ascii_alphanumeric() || bytes[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                Ok((Tok::Ident(self.src[start..self.pos].to_string()), start))
            }
            _ => {
                let ch = self.src[start..].chars().next().unwrap_or('?');
                Err((start, format!("unexpected character `{ch}`")))
            }
        }
    }
}

struct Parser<'r> {
    toks: Vec<(Tok, usize)>,
    at: usize,
    depth: usize,
    ring: &'r Arc<PolyRing>,
}

type PResult<T> = std::result::Result<T, (usize, String)>;

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn offset(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn expr(&mut self) -> PResult<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> PResult<Polynomial> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn enter(&mut self) -> PResult<()> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err((self.offset(), "expression nested too deeply".into()));
        }
        Ok(())
    }

    fn unary(&mut self) -> PResult<Polynomial> {
        self.enter()?;
        let out = self.unary_inner();
        self.depth -= 1;
        out
    }

    fn unary_inner(&mut self) -> PResult<Polynomial> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(-&self.unary()?)
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> PResult<Polynomial> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        let exp = match self.bump() {
            Tok::Num(n) => n,
            Tok::Minus => return Err((at, "exponent must be a non-negative integer".into())),
            Tok::Ident(s) => {
                return Err((
                    at,
                    format!("exponent must be an integer literal, found `{s}`"),
                ))
            }
            _ => return Err((at, "expected an integer exponent".into())),
        };
        if *self.peek() == Tok::Slash {
            return Err((self.offset(), "exponent must be an integer".into()));
        }
        let exp: u32 = u32::try_from(&exp).map_err(|_| (at, "exponent too large".to_string()))?;
        let unit_monomial =
            base.len() == 1 && base.terms().next().is_some_and(|(_, c)| c.abs().is_one());
        if !unit_monomial && exp > MAX_EXPANSION_EXPONENT {
            return Err((
                at,
                format!("refusing to expand a power above {MAX_EXPANSION_EXPONENT}"),
            ));
        }
        if base.len() == 1 {
            let (m, c) = base.terms().next().expect("one term");
            let c = num_traits::pow::pow(c.clone(), exp as usize);
            return Ok(Polynomial::term(self.ring, m.pow(exp), c));
        }
        Ok(base.pow(exp))
    }

    fn atom(&mut self) -> PResult<Polynomial> {
        let at = self.offset();
        match self.bump() {
            Tok::Num(n) => {
                let mut value = Rational::from_integer(n);
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let dat = self.offset();
                    match self.bump() {
                        Tok::Num(d) if !d.is_zero() => value /= Rational::from_integer(d),
                        Tok::Num(_) => return Err((dat, "zero denominator".into())),
                        _ => return Err((dat, "expected an integer denominator".into())),
                    }
                }
                Ok(Polynomial::constant(self.ring, value))
            }
            Tok::Ident(name) => match self.ring.index_of(&name) {
                Some(i) => Ok(Polynomial::variable(self.ring, i).expect("index in range")),
                None => Err((at, format!("unknown identifier `{name}`"))),
            },
            Tok::LParen => {
                let inner = self.expr()?;
                let close = self.offset();
                match self.bump() {
                    Tok::RParen => Ok(inner),
                    _ => Err((close, "unbalanced parentheses: expected `)`".into())),
                }
            }
            Tok::RParen => Err((at, "unbalanced parentheses: unexpected `)`".into())),
            Tok::End => Err((at, "unexpected end of input".into())),
            Tok::Slash => Err((
                at,
                "division is only allowed between integer literals".into(),
            )),
            t => Err((at, format!("unexpected {t}"))),
        }
    }
}

/// Offset-positioned parse: returns the byte offset of any error.
pub(crate) fn parse_at(text: &str, ring: &Arc<PolyRing>) -> PResult<Polynomial> {
    let toks = Lexer::tokens(text)?;
    let mut p = Parser {
        toks,
        at: 0,
        depth: 0,
        ring,
    };
    let out = p.expr()?;
    match p.peek() {
        Tok::End => Ok(out),
        Tok::RParen => Err((p.offset(), "unbalanced parentheses: unexpected `)`".into())),
        Tok::Ident(_) | Tok::Num(_) | Tok::LParen => Err((
            p.offset(),
            "implicit multiplication is not allowed, use `*`".into(),
        )),
        _ => Err((p.offset(), "unexpected trailing input".into())),
    }
}

/// Parses a polynomial written in the expression grammar over `ring`.
///
/// Errors carry a 1-based line and column.
pub fn parse_polynomial(text: &str, ring: &Arc<PolyRing>) -> Result<Polynomial> {
    parse_at(text, ring).map_err(|(offset, msg)| {
        let (line, column) = line_col(text, offset);
        Error::syntax(line, column, msg)
    })
}

pub(crate) fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |s| s.chars().count()) + 1;
    (line, column)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, Monomial};

    fn ring() -> Arc<PolyRing> {
        PolyRing::new(&["x", "y"]).unwrap()
    }

    #[test]
    fn transcribes_terms() {
        let r = ring();
        let p = parse_polynomial("x^2*y - 3/2*y^3", &r).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.coefficient(&Monomial::new(vec![2, 1])), rat(1, 1));
        assert_eq!(p.coefficient(&Monomial::new(vec![0, 3])), rat(-3, 2));
    }

    #[test]
    fn expands_powers() {
        let r = ring();
        let p = parse_polynomial("(x - y)^2", &r).unwrap();
        assert_eq!(p.to_string(), "x^2 - 2*x*y + y^2");
        assert!(parse_polynomial("-(-x)^3 + x^3", &r).unwrap().to_string() == "2*x^3");
    }

    #[test]
    fn rejects_bad_exponents() {
        let r = ring();
        for bad in ["x^-1", "x^a", "x^1/2", "x^"] {
            let e = parse_polynomial(bad, &r).unwrap_err();
            assert!(matches!(e, Error::Syntax { line: 1, .. }), "{bad}: {e}");
        }
    }

    #[test]
    fn positioned_errors() {
        let r = ring();
        match parse_polynomial("x + z", &r).unwrap_err() {
            Error::Syntax {
                column, message, ..
            } => {
                assert_eq!(column, 5);
                assert!(message.contains("unknown identifier"));
            }
            e => panic!("{e}"),
        }
        assert!(parse_polynomial("(x + y", &r).is_err());
        assert!(parse_polynomial("x + y)", &r).is_err());
        assert!(parse_polynomial("2x", &r).is_err());
        assert!(parse_polynomial("x y", &r).is_err());
        assert!(parse_polynomial("1/0", &r).is_err());
        assert!(parse_polynomial("", &r).is_err());
        let deep = "(".repeat(10_000) + "x" + &")".repeat(10_000);
        assert!(parse_polynomial(&deep, &r).is_err());
    }
}
