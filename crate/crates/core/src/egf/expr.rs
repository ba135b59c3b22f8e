//! Tiny expression language for series: `x`, integer and `p/q` literals,
//! `exp(..)`, `log(..)`, `+`, `-`, `*`, `^` with a small integer exponent,
//! and parentheses. Everything is evaluated at a fixed truncation order.

use num_bigint::BigInt;

use super::Egf;
use crate::rational::Q;
use crate::{Error, Result};

const MAX_DEPTH: usize = 64;
const MAX_EXPONENT: u64 = 4096;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_digit() {
            let mut end = pos;
            while let Some(&(p, d)) = chars.peek() {
                if d.is_ascii_digit() {
                    end = p + d.len_utf8();
                    chars.next();
                } else {
                    break;
                }
            }
            let n = text[pos..end].parse().expect("digits");
            out.push((pos, Tok::Num(n)));
        } else if c.is_ascii_alphabetic() {
            let mut end = pos;
            while let Some(&(p, d)) = chars.peek() {
                if d.is_ascii_alphanumeric() {
                    end = p + d.len_utf8();
                    chars.next();
                } else {
                    break;
                }
            }
            out.push((pos, Tok::Ident(text[pos..end].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((pos, Tok::Sym(c)));
            chars.next();
        } else {
            return Err(Error::parse(
                "series",
                pos,
                format!("unexpected character {c:?}"),
            ));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    at: usize,
    order: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse("series", self.pos(), msg)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self, depth: usize) -> Result<Egf> {
        if depth > MAX_DEPTH {
            return Err(self.err("expression nested too deeply"));
        }
        let mut acc = self.term(depth)?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term(depth)?)?;
            } else if self.eat('-') {
                acc = acc.sub(&self.term(depth)?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self, depth: usize) -> Result<Egf> {
        let mut acc = self.unary(depth)?;
        while self.eat('*') {
            acc = acc.multiply(&self.unary(depth)?)?;
        }
        Ok(acc)
    }

    fn unary(&mut self, depth: usize) -> Result<Egf> {
        if depth > MAX_DEPTH {
            return Err(self.err("expression nested too deeply"));
        }
        if self.eat('-') {
            return Ok(self.unary(depth + 1)?.scale(&Q::from_integer((-1).into())));
        }
        let base = self.atom(depth)?;
        if self.eat('^') {
            let pos = self.pos();
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.at += 1;
                    let e = u64::try_from(&n)
                        .ok()
                        .filter(|e| *e <= MAX_EXPONENT)
                        .ok_or_else(|| {
                            Error::parse(
                                "series",
                                pos,
                                format!("exponent must be at most {MAX_EXPONENT}"),
                            )
                        })?;
                    Ok(base.pow(e))
                }
                _ => Err(self.err("expected an integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self, depth: usize) -> Result<Egf> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.at += 1;
                let mut value = Q::from_integer(n);
                if self.eat('/') {
                    match self.peek().cloned() {
                        Some(Tok::Num(d)) if d != BigInt::from(0) => {
                            self.at += 1;
                            value /= Q::from_integer(d);
                        }
                        _ => return Err(self.err("expected a nonzero integer denominator")),
                    }
                }
                Ok(Egf::constant(self.order, value))
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                match name.as_str() {
                    "x" => Ok(Egf::x(self.order)),
                    "exp" | "log" => {
                        if !self.eat('(') {
                            return Err(self.err(format!("expected '(' after {name}")));
                        }
                        let arg = self.expr(depth + 1)?;
                        if !self.eat(')') {
                            return Err(self.err("expected ')'"));
                        }
                        let value = if name == "exp" { arg.exp() } else { arg.log() };
                        value.map_err(|e| Error::parse("series", pos, e.to_string()))
                    }
                    _ => Err(Error::parse(
                        "series",
                        pos,
                        format!("unknown identifier {name:?}"),
                    )),
                }
            }
            Some(Tok::Sym('(')) => {
                self.at += 1;
                let inner = self.expr(depth + 1)?;
                if !self.eat(')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(inner)
            }
            Some(t) => Err(self.err(format!("unexpected token {t:?}"))),
            None => Err(self.err("unexpected end of expression")),
        }
    }
}

/// Parses and evaluates a series expression such as `"exp(x)-1"` at the
/// given truncation order.
pub fn parse_series(text: &str, order: usize) -> Result<Egf> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks: &toks,
        at: 0,
        order,
        end: text.len(),
    };
    let value = p.expr(0)?;
    if p.at != toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, q_frac};

    #[test]
    fn basic_expressions() {
        let f = parse_series("exp(x)-1", 4).unwrap();
        assert_eq!(f.coeffs(), &[q(0), q(1), q(1), q(1), q(1)]);
        assert_eq!(parse_series("x", 3).unwrap(), Egf::x(3));
        let l = parse_series("log(1+x)", 3).unwrap();
        assert_eq!(l.coeffs(), &[q(0), q(1), q(-1), q(2)]);
        let g = parse_series("1/2*x^2 - -3", 3).unwrap();
        // x²/2 has EGF coefficient 1 at n = 2
        assert_eq!(g.coeffs(), &[q(3), q(0), q(1), q(0)]);
        assert_eq!(parse_series("(2/4)", 0).unwrap().coeffs(), &[q_frac(1, 2)]);
    }

    #[test]
    fn nested_exponentials() {
        let s2 = parse_series("exp(exp(x)-1)-1", 5).unwrap();
        assert_eq!(s2.coeffs(), &[q(0), q(1), q(2), q(5), q(15), q(52)]);
    }

    #[test]
    fn errors_carry_positions() {
        let pos = |s: &str| match parse_series(s, 3) {
            Err(Error::Parse { position, .. }) => position,
            other => panic!("{s}: {other:?}"),
        };
        assert_eq!(pos("x + y"), 4);
        assert_eq!(pos("exp(1)"), 0);
        assert_eq!(pos("log(x)"), 0);
        assert_eq!(pos("1/0"), 2);
        assert_eq!(pos("(x"), 2);
        assert_eq!(pos("x $"), 2);
        assert_eq!(pos("x^99999"), 2);
        assert_eq!(pos("x x"), 2);
        assert!(parse_series(&"(".repeat(200), 2).is_err());
        assert!(parse_series(&"-".repeat(200), 2).is_err());
    }
}
