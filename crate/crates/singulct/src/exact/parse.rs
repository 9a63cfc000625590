//! Recursive-descent parser for the polynomial input grammar.
//!
//! Grammar: integer literals, identifiers, `+ - * ^`, parentheses. `^` binds
//! tightest and takes a nonnegative integer literal; unary minus is allowed;
//! whitespace is insignificant.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::poly::Polynomial;
use crate::exact::rational::Rat;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn tokens(text: &'a str) -> Result<Vec<(Tok, usize)>> {
        let mut lx = Lexer {
            src: text.as_bytes(),
            pos: 0,
        };
        let mut out = Vec::new();
        while lx.pos < lx.src.len() {
            let start = lx.pos;
            let c = lx.src[lx.pos];
            match c {
                b' ' | b'\t' | b'\r' | b'\n' => {
                    lx.pos += 1;
                }
                b'+' => {
                    out.push((Tok::Plus, start));
                    lx.pos += 1;
                }
                b'-' => {
                    out.push((Tok::Minus, start));
                    lx.pos += 1;
                }
                b'*' => {
                    out.push((Tok::Star, start));
                    lx.pos += 1;
                }
                b'^' => {
                    out.push((Tok::Caret, start));
                    lx.pos += 1;
                }
                b'(' => {
                    out.push((Tok::LParen, start));
                    lx.pos += 1;
                }
                b')' => {
                    out.push((Tok::RParen, start));
                    lx.pos += 1;
                }
                b'0'..=b'9' => {
                    while lx.pos < lx.src.len() && lx.src[lx.pos].is_ascii_digit() {
                        lx.pos += 1;
                    }
                    let digits = std::str::from_utf8(&lx.src[start..lx.pos]).unwrap();
                    out.push((Tok::Int(digits.parse().unwrap()), start));
                }
                c if c.is_ascii_alphabetic() || c == b'_' => {
                    while lx.pos < lx.src.len()
                        && (lx.src[lx.pos].is_ascii_alphanumeric() || lx.src[lx.pos] == b'_')
                    {
                        lx.pos += 1;
                    }
                    let name = std::str::from_utf8(&lx.src[start..lx.pos]).unwrap();
                    out.push((Tok::Ident(name.to_string()), start));
                }
                other => {
                    return Err(Error::Syntax {
                        pos: start,
                        msg: format!("unexpected character `{}`", other as char),
                    })
                }
            }
        }
        Ok(out)
    }
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    idx: usize,
    vars: &'a [String],
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.idx).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|(t, _)| t.clone());
        self.idx += 1;
        t
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while matches!(self.peek(), Some(Tok::Star)) {
            self.bump();
            acc = acc.mul(&self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.bump();
            return Ok(self.unary()?.neg());
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.bump();
            let pos = self.pos();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let exp = u32::try_from(&n).map_err(|_| Error::InvalidExponent {
                        pos,
                        msg: format!("exponent {} is too large", n),
                    })?;
                    return Ok(base.pow(exp));
                }
                _ => {
                    return Err(Error::InvalidExponent {
                        pos,
                        msg: "exponent must be a nonnegative integer literal".to_string(),
                    })
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Int(n)) => Ok(Polynomial::constant(
                self.vars.len(),
                Rat::new(n, BigInt::one()),
            )),
            Some(Tok::Ident(name)) => match self.vars.iter().position(|v| *v == name) {
                Some(i) => Ok(Polynomial::variable(self.vars.len(), i)),
                None => Err(Error::UnknownVariable { name, pos }),
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                let pos = self.pos();
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(Error::Syntax {
                        pos,
                        msg: "expected `)`".to_string(),
                    }),
                }
            }
            other => Err(Error::Syntax {
                pos,
                msg: match other {
                    Some(t) => format!("unexpected token {:?}", t),
                    None => "unexpected end of input".to_string(),
                },
            }),
        }
    }
}

/// Parse `text` into an exact polynomial over the given variables.
pub fn parse_polynomial(text: &str, variable_names: &[String]) -> Result<Polynomial> {
    if variable_names.is_empty() {
        return Err(Error::InvalidConfig(
            "at least one variable name is required".to_string(),
        ));
    }
    for (i, a) in variable_names.iter().enumerate() {
        if variable_names[..i].contains(a) {
            return Err(Error::InvalidConfig(format!(
                "duplicate variable name `{}`",
                a
            )));
        }
    }
    let toks = Lexer::tokens(text)?;
    let mut p = Parser {
        toks,
        idx: 0,
        vars: variable_names,
        end: text.len(),
    };
    let poly = p.expr()?;
    if p.idx != p.toks.len() {
        return Err(Error::Syntax {
            pos: p.pos(),
            msg: "trailing input after expression".to_string(),
        });
    }
    Ok(poly)
}

/// Convenience wrapper taking `&str` names.
pub fn parse(text: &str, names: &[&str]) -> Result<Polynomial> {
    let owned: Vec<String> = names.iter().map(|s| s.to_string()).collect();
    parse_polynomial(text, &owned)
}
