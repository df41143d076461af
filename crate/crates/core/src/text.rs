//! Shared text grammar for scalars, algebra elements and tensors.
//!
//! ```text
//! sum      := ['+'|'-'] tensor (('+'|'-') tensor)*
//! tensor   := product ('ox' product)*
//! product  := power (['*'] power | '/' power)*
//! power    := atom ['^' exponent]
//! exponent := ['-'] int ['/' int] | '(' ['-'] int ['/' int] ')'
//! atom     := int | 'r' | 's' | generator | '(' sum ')'
//! ```
//!
//! Juxtaposition is the (noncommutative) product; `r` and `s` are central.
//! A generator is one letter, an optional index and an optional prime, e.g.
//! `E1`, `K2'`, `w1`, `e1'`, `f2`. Division is only allowed by scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::algebra::element::TensorElement;
use crate::algebra::gen::{Gen, Word};
use crate::coeff::{Mono, RatFunc};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Ox,
    Caret,
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>> {
    let b = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i] as char;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '^' => Tok::Caret,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            d if d.is_ascii_digit() => {
                while i < b.len() && (b[i] as char).is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Num(src[start..i].parse().expect("digits"))));
                continue;
            }
            l if l.is_ascii_alphabetic() => {
                if src[i..].starts_with("ox")
                    && !b
                        .get(i + 2)
                        .is_some_and(|&n| (n as char).is_ascii_alphanumeric() || n == b'\'')
                {
                    i += 2;
                    out.push((start, Tok::Ox));
                    continue;
                }
                i += 1;
                while i < b.len() && (b[i] as char).is_ascii_digit() {
                    i += 1;
                }
                if i < b.len() && b[i] == b'\'' {
                    i += 1;
                }
                out.push((start, Tok::Ident(src[start..i].to_string())));
                continue;
            }
            other => {
                return Err(Error::Parse {
                    pos: i,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

/// Parsed value: tensor of arity >= 1 (arity 1 is a plain element).
type Val = TensorElement;

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    len: usize,
    allow_gens: bool,
    _src: &'a str,
}

fn scalar_val(c: RatFunc) -> Val {
    TensorElement::term(c, vec![Vec::new()])
}

fn arity(v: &Val) -> usize {
    v.arity().unwrap_or(1)
}

fn as_scalar(v: &Val) -> Option<RatFunc> {
    if v.is_zero() {
        return Some(RatFunc::zero());
    }
    if v.terms().all(|(ws, _)| ws.len() == 1 && ws[0].is_empty()) {
        Some(v.coeff(&[Vec::new()]))
    } else {
        None
    }
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn at(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.len)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.at(),
            msg: msg.into(),
        })
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<Val> {
        let mut neg = false;
        if self.eat(&Tok::Minus) {
            neg = true;
        } else {
            self.eat(&Tok::Plus);
        }
        let mut acc = self.tensor()?;
        if neg {
            acc = acc.scale(&RatFunc::from_int(-1));
        }
        loop {
            let sign = if self.eat(&Tok::Plus) {
                1
            } else if self.eat(&Tok::Minus) {
                -1
            } else {
                break;
            };
            let t = self.tensor()?;
            if !acc.is_zero() && !t.is_zero() && arity(&acc) != arity(&t) {
                return self.err("cannot add tensors of different arity");
            }
            acc.add_scaled(&t, &RatFunc::from_int(sign));
        }
        Ok(acc)
    }

    fn tensor(&mut self) -> Result<Val> {
        let mut acc = self.product()?;
        while self.eat(&Tok::Ox) {
            let rhs = self.product()?;
            let mut out = TensorElement::zero();
            for (w1, c1) in acc.terms() {
                for (w2, c2) in rhs.terms() {
                    let mut ws = w1.clone();
                    ws.extend(w2.iter().cloned());
                    out.add_term(ws, &(c1 * c2));
                }
            }
            acc = out;
        }
        Ok(acc)
    }

    fn starts_atom(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen)
        )
    }

    fn product(&mut self) -> Result<Val> {
        let mut acc = self.power()?;
        loop {
            if self.eat(&Tok::Star) {
                let rhs = self.power()?;
                acc = self.mul(&acc, &rhs)?;
            } else if self.eat(&Tok::Slash) {
                let rhs = self.power()?;
                let Some(d) = as_scalar(&rhs) else {
                    return self.err("division by a non-scalar");
                };
                if d.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                acc = acc.scale(&d.inv()?);
            } else if self.starts_atom() {
                let rhs = self.power()?;
                acc = self.mul(&acc, &rhs)?;
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn mul(&self, a: &Val, b: &Val) -> Result<Val> {
        if let Some(c) = as_scalar(a) {
            return Ok(b.scale(&c));
        }
        if let Some(c) = as_scalar(b) {
            return Ok(a.scale(&c));
        }
        if arity(a) != 1 || arity(b) != 1 {
            return self.err("products of tensors must be written slotwise");
        }
        let mut out = TensorElement::zero();
        for (w1, c1) in a.terms() {
            for (w2, c2) in b.terms() {
                let mut w = w1[0].clone();
                w.extend_from_slice(&w2[0]);
                out.add_term(vec![w], &(c1 * c2));
            }
        }
        Ok(out)
    }

    fn exponent(&mut self) -> Result<BigRational> {
        let paren = self.eat(&Tok::LParen);
        let neg = self.eat(&Tok::Minus);
        let Some(Tok::Num(n)) = self.peek().cloned() else {
            return self.err("expected an exponent");
        };
        self.pos += 1;
        let mut q = BigRational::from_integer(n);
        // `r^3/2` reads as a fractional exponent only when digits follow the slash
        if matches!(self.peek(), Some(Tok::Slash))
            && matches!(self.toks.get(self.pos + 1), Some((_, Tok::Num(_))))
        {
            self.pos += 1;
            let Some(Tok::Num(d)) = self.peek().cloned() else {
                unreachable!()
            };
            self.pos += 1;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            q /= BigRational::from_integer(d);
        }
        if paren && !self.eat(&Tok::RParen) {
            return self.err("expected `)` after exponent");
        }
        Ok(if neg { -q } else { q })
    }

    fn power(&mut self) -> Result<Val> {
        let (base, atom_letter) = self.atom()?;
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        let e = self.exponent()?;
        if let Some(c) = as_scalar(&base) {
            if let Some((m, k)) = c.as_monomial() {
                if k == BigRational::from_integer(1.into()) {
                    let r = m.r_exp() * &e;
                    let s = m.s_exp() * &e;
                    let Some(mm) = Mono::rational(&r, &s) else {
                        return self.err("exponent denominator too large");
                    };
                    return Ok(scalar_val(RatFunc::mono(mm)));
                }
            }
            if !e.is_integer() {
                return self.err("fractional power of a non-monomial scalar");
            }
            let k = e.to_integer().to_i64().ok_or_else(|| Error::Parse {
                pos: self.at(),
                msg: "exponent too large".into(),
            })?;
            if k < 0 && c.is_zero() {
                return Err(Error::DivisionByZero);
            }
            return Ok(scalar_val(c.pow(k)));
        }
        if !e.is_integer() {
            return self.err("fractional power of a generator");
        }
        let k = e.to_integer().to_i64().unwrap_or(0);
        let (base, k) = if k < 0 {
            let Some(g) = atom_letter.and_then(|g| g.inverse()) else {
                return self.err("negative power of a non-invertible element");
            };
            (TensorElement::term(RatFunc::one(), vec![vec![g]]), -k)
        } else {
            (base, k)
        };
        let mut acc = scalar_val(RatFunc::one());
        for _ in 0..k {
            acc = self.mul(&acc, &base)?;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<(Val, Option<Gen>)> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok((
                    scalar_val(RatFunc::from_rational(BigRational::from_integer(n))),
                    None,
                ))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let v = self.sum()?;
                if !self.eat(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                Ok((v, None))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match name.as_str() {
                    "r" => Ok((scalar_val(RatFunc::r()), None)),
                    "s" => Ok((scalar_val(RatFunc::s()), None)),
                    _ => {
                        if !self.allow_gens {
                            self.pos -= 1;
                            return self.err(format!("unexpected symbol `{name}` in a scalar"));
                        }
                        match Gen::from_name(&name) {
                            Some(g) => {
                                Ok((TensorElement::term(RatFunc::one(), vec![vec![g]]), Some(g)))
                            }
                            None => {
                                self.pos -= 1;
                                self.err(format!("unknown generator `{name}`"))
                            }
                        }
                    }
                }
            }
            _ => self.err("expected a term"),
        }
    }
}

fn run(src: &str, allow_gens: bool) -> Result<Val> {
    let toks = tokenize(src)?;
    if toks.is_empty() {
        return Err(Error::Parse {
            pos: 0,
            msg: "empty input".into(),
        });
    }
    let mut p = Parser {
        toks,
        pos: 0,
        len: src.len(),
        allow_gens,
        _src: src,
    };
    let v = p.sum()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(v)
}

pub fn parse_scalar(src: &str) -> Result<RatFunc> {
    let v = run(src, false)?;
    as_scalar(&v).ok_or_else(|| Error::Parse {
        pos: 0,
        msg: "expected a scalar".into(),
    })
}

/// Parses an element (arity 1) or a tensor; returns the slots.
pub fn parse_general(src: &str) -> Result<TensorElement> {
    run(src, true)
}

pub(crate) fn single_slot(v: &TensorElement) -> Option<Vec<(Word, RatFunc)>> {
    if v.terms().all(|(ws, _)| ws.len() == 1) {
        Some(
            v.terms()
                .map(|(ws, c)| (ws[0].clone(), c.clone()))
                .collect(),
        )
    } else {
        None
    }
}
