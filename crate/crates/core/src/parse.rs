//! Text syntax for rationals, polynomials, rational functions, and the
//! bracket notation for continued fractions.
//!
//! Expression grammar: integer and rational literals, the variable `n` or
//! `x`, operators `+ - * / ^`, parentheses, and implicit multiplication by
//! juxtaposition (`8(n-1)`, `2n-1`, `(2n-1)(n^2-n+1)`). `^` takes a
//! nonnegative integer exponent.
//!
//! Continued fraction grammar: `[[c0,...,A(n)],[d0,...,B(n)]]` with at
//! least one leading constant per bracket and a trailing tail polynomial.

use std::str::FromStr;

use num::BigInt;

use crate::error::{Error, Result};
use crate::gcf::Gcf;
use crate::poly::PolyQ;
use crate::rat::Rat;
use crate::ratfunc::RatFunc;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Var,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let tok = match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ',' => Tok::Comma,
            'n' | 'x' => Tok::Var,
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let num = BigInt::from_str(&text[start..i]).expect("digits");
                out.push((Tok::Num(num), start));
                continue;
            }
            other => {
                return Err(Error::Parse {
                    pos: i,
                    msg: format!("unexpected character {other:?}"),
                })
            }
        };
        out.push((tok, i));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [(Tok, usize)],
    pos: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn new(toks: &'a [(Tok, usize)], end: usize) -> Self {
        Parser { toks, pos: 0, end }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, p)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected {what}")))
        }
    }

    fn err(&self, msg: String) -> Error {
        Error::Parse {
            pos: self.here(),
            msg,
        }
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc * self.unary()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    if rhs.is_zero() {
                        return Err(self.err("division by zero".into()));
                    }
                    acc = acc / rhs;
                }
                // Juxtaposition: a literal, variable, or group directly
                // after an operand multiplies it.
                Some(Tok::Num(_)) | Some(Tok::Var) | Some(Tok::LParen) => {
                    acc = acc * self.postfix()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RatFunc> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.postfix()
    }

    fn postfix(&mut self) -> Result<RatFunc> {
        let mut base = self.primary()?;
        while self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let exp = match self.bump() {
                Some(Tok::Num(e)) => u32::try_from(e)
                    .map_err(|_| self.err("exponent too large".into()))?,
                _ => return Err(self.err("expected integer exponent after ^".into())),
            };
            let num = base.num().pow(exp);
            let den = base.den().pow(exp);
            base = RatFunc::new(num, den)?;
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<RatFunc> {
        match self.bump() {
            Some(Tok::Num(v)) => Ok(RatFunc::constant(Rat::from_bigint(v))),
            Some(Tok::Var) => Ok(RatFunc::from_poly(PolyQ::x())),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "closing parenthesis")?;
                Ok(inner)
            }
            _ => Err(self.err("expected a number, variable, or group".into())),
        }
    }
}

/// Parses a rational function in `n` (or `x`).
pub fn parse_ratfunc(text: &str) -> Result<RatFunc> {
    let toks = tokenize(text)?;
    let mut p = Parser::new(&toks, text.len());
    let f = p.expr()?;
    if p.pos != toks.len() {
        return Err(p.err("trailing input".into()));
    }
    Ok(f)
}

/// Parses a polynomial; rejects genuine rational functions.
pub fn parse_poly(text: &str) -> Result<PolyQ> {
    let f = parse_ratfunc(text)?;
    f.as_poly().ok_or(Error::Parse {
        pos: 0,
        msg: format!("{text:?} is not a polynomial"),
    })
}

/// Parses a rational constant, e.g. `-3/4`.
pub fn parse_rat(text: &str) -> Result<Rat> {
    let p = parse_poly(text)?;
    p.as_constant().ok_or(Error::Parse {
        pos: 0,
        msg: format!("{text:?} is not a constant"),
    })
}

/// Parses the bracket notation for a continued fraction.
///
/// The two brackets may carry different numbers of leading constants; the
/// shorter side is padded by evaluating its tail polynomial, so
/// `[[0,1,8(n-1)],[1,(2n-1)^4]]` parses with two prefix terms.
pub fn parse_cf(text: &str) -> Result<Gcf> {
    let toks = tokenize(text)?;
    let mut p = Parser::new(&toks, text.len());
    p.expect(Tok::LBracket, "opening [ for the bracket pair")?;
    let mut groups: Vec<Vec<RatFunc>> = Vec::new();
    loop {
        p.expect(Tok::LBracket, "opening [ of a bracket group")?;
        let mut entries = vec![p.expr()?];
        while p.peek() == Some(&Tok::Comma) {
            p.pos += 1;
            entries.push(p.expr()?);
        }
        p.expect(Tok::RBracket, "closing ] of a bracket group")?;
        groups.push(entries);
        match p.bump() {
            Some(Tok::Comma) => continue,
            Some(Tok::RBracket) => break,
            _ => return Err(p.err("expected , or ] after a bracket group".into())),
        }
    }
    if p.pos != toks.len() {
        return Err(p.err("trailing input".into()));
    }
    if groups.len() != 2 {
        return Err(Error::ArityMismatch(groups.len()));
    }
    let b_group = groups.pop().unwrap();
    let a_group = groups.pop().unwrap();

    let split = |mut g: Vec<RatFunc>, side: &str| -> Result<(Vec<Rat>, PolyQ)> {
        if g.len() < 2 {
            return Err(Error::Parse {
                pos: 0,
                msg: format!("{side} bracket needs at least one constant and a tail polynomial"),
            });
        }
        let tail = g.pop().unwrap();
        let tail = tail.as_poly().ok_or(Error::Parse {
            pos: 0,
            msg: format!("{side} tail entry is not a polynomial"),
        })?;
        let mut consts = Vec::with_capacity(g.len());
        for (i, e) in g.into_iter().enumerate() {
            let c = e.as_poly().and_then(|p| p.as_constant()).ok_or(Error::Parse {
                pos: 0,
                msg: format!("{side} entry {i} must be a constant"),
            })?;
            consts.push(c);
        }
        Ok((consts, tail))
    };

    let (a_consts, tail_a) = split(a_group, "first")?;
    let (b_consts, tail_b) = split(b_group, "second")?;

    let m = a_consts.len().max(b_consts.len());
    let pad = |mut v: Vec<Rat>, tail: &PolyQ| {
        while v.len() < m {
            v.push(tail.eval_int(v.len() as i64));
        }
        v
    };
    let a_consts = pad(a_consts, &tail_a);
    let b_consts = pad(b_consts, &tail_b);
    let prefix = a_consts.into_iter().zip(b_consts).collect();
    Gcf::new(prefix, tail_a, tail_b)
}

impl FromStr for Gcf {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_cf(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_forms() {
        let p = parse_poly("2*n^4-4*n^3+10*n^2-8*n+3").unwrap();
        assert_eq!(p, PolyQ::from_ints(&[3, -8, 10, -4, 2]));
        assert_eq!(parse_poly("2n-1").unwrap(), PolyQ::from_ints(&[-1, 2]));
        assert_eq!(parse_poly("8(n-1)").unwrap(), PolyQ::from_ints(&[-8, 8]));
        assert_eq!(
            parse_poly("(2n-1)(n^2-n+1)").unwrap(),
            PolyQ::from_ints(&[-1, 3, -3, 2])
        );
        assert_eq!(
            parse_poly("(-3)/2*n+1").unwrap(),
            PolyQ::from_coeffs(vec![Rat::one(), Rat::new(-3, 2)])
        );
        assert_eq!(parse_poly("-(n^8+2n^7)").unwrap().to_text('n'), "-n^8-2*n^7");
    }

    #[test]
    fn rational_function_forms() {
        let f = parse_ratfunc("n^3/(n+1)").unwrap();
        assert_eq!(f.num(), &PolyQ::monomial(Rat::one(), 3));
        assert_eq!(f.den(), &PolyQ::from_ints(&[1, 1]));
        assert!(parse_poly("n^3/(n+1)").is_err());
    }

    #[test]
    fn rational_constants() {
        assert_eq!(parse_rat("81/2").unwrap(), Rat::new(81, 2));
        assert_eq!(parse_rat("-16").unwrap(), Rat::from_int(-16));
        assert_eq!(parse_rat("(-1)^3/2").unwrap(), Rat::new(-1, 2));
    }

    #[test]
    fn bad_input_positions() {
        let err = parse_poly("2*n$3").unwrap_err();
        assert!(matches!(err, Error::Parse { pos: 3, .. }));
        assert!(parse_poly("2*(n").is_err());
        assert!(parse_poly("2*/n").is_err());
        assert!(parse_ratfunc("1/0").is_err());
    }

    #[test]
    fn powers_bind_tighter_than_unary_minus() {
        // -n^2 evaluates to -(n^2)
        let p = parse_poly("-n^2").unwrap();
        assert_eq!(p, PolyQ::monomial(Rat::from_int(-1), 2));
        let q = parse_poly("3n^2^1").unwrap();
        assert_eq!(q, PolyQ::monomial(Rat::from_int(3), 2));
    }
}
