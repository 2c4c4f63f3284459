//! Term grammar over the MV operations with optional rational scalars:
//!
//! ```text
//! term   := scalar? disj
//! disj   := conj  { "\/"  conj }
//! conj   := sum   { "/\"  sum }
//! sum    := prod  { "(+)" prod }
//! prod   := atom  { "(.)" atom }
//! atom   := "~" atom | "(" term ")" | ident | "0" | "1"
//! scalar := RAT "#"
//! ```
//!
//! Left associative within a level; `~` binds tightest; `#` applies to the
//! whole following term at its nesting level.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use rand::Rng;

use crate::error::{Error, Result};
use crate::freepwl::Pwl;
use crate::mvcore;
use crate::rat::{in_unit_interval, QVector, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    Var(String),
    Zero,
    One,
    Neg(Box<Term>),
    Oplus(Box<Term>, Box<Term>),
    Odot(Box<Term>, Box<Term>),
    Join(Box<Term>, Box<Term>),
    Meet(Box<Term>, Box<Term>),
    Scalar(Rat, Box<Term>),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Slash,
    Hash,
    Oplus,
    Odot,
    Join,
    Meet,
    Tilde,
    LParen,
    RParen,
    Ident(String),
}

fn lex(input: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = input.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '(' => {
                if chars.get(i + 1) == Some(&'+') && chars.get(i + 2) == Some(&')') {
                    toks.push((i, Tok::Oplus));
                    i += 3;
                } else if chars.get(i + 1) == Some(&'.') && chars.get(i + 2) == Some(&')') {
                    toks.push((i, Tok::Odot));
                    i += 3;
                } else {
                    toks.push((i, Tok::LParen));
                    i += 1;
                }
            }
            ')' => {
                toks.push((i, Tok::RParen));
                i += 1;
            }
            '\\' => {
                if chars.get(i + 1) == Some(&'/') {
                    toks.push((i, Tok::Join));
                    i += 2;
                } else {
                    return Err(Error::Parse(format!("stray '\\' at position {i}")));
                }
            }
            '/' => {
                if chars.get(i + 1) == Some(&'\\') {
                    toks.push((i, Tok::Meet));
                    i += 2;
                } else {
                    toks.push((i, Tok::Slash));
                    i += 1;
                }
            }
            '~' => {
                toks.push((i, Tok::Tilde));
                i += 1;
            }
            '#' => {
                toks.push((i, Tok::Hash));
                i += 1;
            }
            _ if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                toks.push((start, Tok::Num(s.parse().expect("digits"))));
            }
            _ if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                toks.push((start, Tok::Ident(chars[start..i].iter().collect())));
            }
            _ => return Err(Error::Parse(format!("unexpected character {c:?} at position {i}"))),
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn peek2(&self) -> Option<&Tok> {
        self.toks.get(self.pos + 1).map(|(_, t)| t)
    }

    fn at(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or(usize::MAX)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Tok) -> Result<()> {
        match self.bump() {
            Some(t) if t == want => Ok(()),
            other => Err(Error::Parse(format!(
                "expected {want:?}, found {other:?} at position {}",
                self.at()
            ))),
        }
    }

    fn term(&mut self) -> Result<Term> {
        // A leading NUM SLASH NUM HASH is a scalar prefix.
        if let (Some(Tok::Num(_)), Some(Tok::Slash)) = (self.peek(), self.peek2()) {
            let pos = self.at();
            let Some(Tok::Num(n)) = self.bump() else { unreachable!() };
            self.expect(Tok::Slash)?;
            let d = match self.bump() {
                Some(Tok::Num(d)) => d,
                other => {
                    return Err(Error::Parse(format!(
                        "expected denominator after '/', found {other:?} at position {pos}"
                    )))
                }
            };
            self.expect(Tok::Hash)?;
            let q = Rat::new(n, d);
            if !in_unit_interval(&q) {
                return Err(Error::Domain(format!("scalar {q} outside [0,1]")));
            }
            let body = self.disj()?;
            return Ok(Term::Scalar(q, Box::new(body)));
        }
        self.disj()
    }

    fn disj(&mut self) -> Result<Term> {
        let mut t = self.conj()?;
        while self.peek() == Some(&Tok::Join) {
            self.bump();
            t = Term::Join(Box::new(t), Box::new(self.conj()?));
        }
        Ok(t)
    }

    fn conj(&mut self) -> Result<Term> {
        let mut t = self.sum()?;
        while self.peek() == Some(&Tok::Meet) {
            self.bump();
            t = Term::Meet(Box::new(t), Box::new(self.sum()?));
        }
        Ok(t)
    }

    fn sum(&mut self) -> Result<Term> {
        let mut t = self.prod()?;
        while self.peek() == Some(&Tok::Oplus) {
            self.bump();
            t = Term::Oplus(Box::new(t), Box::new(self.prod()?));
        }
        Ok(t)
    }

    fn prod(&mut self) -> Result<Term> {
        let mut t = self.atom()?;
        while self.peek() == Some(&Tok::Odot) {
            self.bump();
            t = Term::Odot(Box::new(t), Box::new(self.atom()?));
        }
        Ok(t)
    }

    fn atom(&mut self) -> Result<Term> {
        let pos = self.at();
        match self.bump() {
            Some(Tok::Tilde) => Ok(Term::Neg(Box::new(self.atom()?))),
            Some(Tok::LParen) => {
                let t = self.term()?;
                self.expect(Tok::RParen)?;
                Ok(t)
            }
            Some(Tok::Ident(name)) => Ok(Term::Var(name)),
            Some(Tok::Num(n)) => {
                if n == BigInt::from(0) {
                    Ok(Term::Zero)
                } else if n == BigInt::from(1) {
                    Ok(Term::One)
                } else {
                    Err(Error::Parse(format!(
                        "only the constants 0 and 1 are allowed, found {n} at position {pos}"
                    )))
                }
            }
            other => Err(Error::Parse(format!(
                "expected an atom, found {other:?} at position {pos}"
            ))),
        }
    }
}

pub fn parse_term(input: &str) -> Result<Term> {
    let toks = lex(input)?;
    let mut p = Parser { toks, pos: 0 };
    let t = p.term()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!(
            "trailing input at position {}",
            p.at()
        )));
    }
    Ok(t)
}

// Precedence levels for printing: 0 disj, 1 conj, 2 sum, 3 prod, 4 atom.
fn level(t: &Term) -> u8 {
    match t {
        Term::Join(..) => 0,
        Term::Meet(..) => 1,
        Term::Oplus(..) => 2,
        Term::Odot(..) => 3,
        Term::Scalar(..) => 0, // always parenthesized when nested
        _ => 4,
    }
}

fn print_at(t: &Term, min_level: u8, top: bool, out: &mut String) {
    // A scalar prefix is only grammatical at the start of a term, so a
    // nested Scalar is always parenthesized.
    let paren = level(t) < min_level || matches!(t, Term::Scalar(..)) && !top;
    if paren {
        out.push('(');
        print_at(t, 0, true, out);
        out.push(')');
        return;
    }
    match t {
        Term::Var(v) => out.push_str(v),
        Term::Zero => out.push('0'),
        Term::One => out.push('1'),
        Term::Neg(x) => {
            out.push('~');
            print_at(x, 4, false, out);
        }
        Term::Join(a, b) => {
            print_at(a, 0, false, out);
            out.push_str(" \\/ ");
            print_at(b, 1, false, out);
        }
        Term::Meet(a, b) => {
            print_at(a, 1, false, out);
            out.push_str(" /\\ ");
            print_at(b, 2, false, out);
        }
        Term::Oplus(a, b) => {
            print_at(a, 2, false, out);
            out.push_str(" (+) ");
            print_at(b, 3, false, out);
        }
        Term::Odot(a, b) => {
            print_at(a, 3, false, out);
            out.push_str(" (.) ");
            print_at(b, 4, false, out);
        }
        Term::Scalar(q, body) => {
            out.push_str(&format!("{}/{}", q.numer(), q.denom()));
            out.push_str(" # ");
            print_at(body, 0, false, out);
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        print_at(self, 0, true, &mut s);
        write!(f, "{s}")
    }
}

/// Evaluates a term over vectors. `riesz` permits scalar nodes; in a plain
/// MV context they are a context error.
pub fn eval_term(
    t: &Term,
    env: &BTreeMap<String, QVector>,
    dim: usize,
    riesz: bool,
) -> Result<QVector> {
    match t {
        Term::Var(v) => env
            .get(v)
            .cloned()
            .ok_or_else(|| Error::Domain(format!("unbound variable {v}"))),
        Term::Zero => Ok(QVector::zeros(dim)),
        Term::One => Ok(QVector::ones(dim)),
        Term::Neg(x) => mvcore::neg(&eval_term(x, env, dim, riesz)?),
        Term::Oplus(a, b) => mvcore::oplus(
            &eval_term(a, env, dim, riesz)?,
            &eval_term(b, env, dim, riesz)?,
        ),
        Term::Odot(a, b) => mvcore::odot(
            &eval_term(a, env, dim, riesz)?,
            &eval_term(b, env, dim, riesz)?,
        ),
        Term::Join(a, b) => mvcore::join(
            &eval_term(a, env, dim, riesz)?,
            &eval_term(b, env, dim, riesz)?,
        ),
        Term::Meet(a, b) => mvcore::meet(
            &eval_term(a, env, dim, riesz)?,
            &eval_term(b, env, dim, riesz)?,
        ),
        Term::Scalar(q, body) => {
            if !riesz {
                return Err(Error::Domain(
                    "scalar multiplication outside a Riesz context".into(),
                ));
            }
            Ok(eval_term(body, env, dim, riesz)?.scale(q))
        }
    }
}

/// Compiles a one-variable term to its exact piecewise-linear
/// interpretation over [0,1]. Every variable denotes the identity.
pub fn term_to_pwl(t: &Term) -> Result<Pwl> {
    match t {
        Term::Var(_) => Ok(Pwl::identity()),
        Term::Zero => Ok(Pwl::constant(Rat::from_integer(0.into()))),
        Term::One => Ok(Pwl::constant(Rat::from_integer(1.into()))),
        Term::Neg(x) => term_to_pwl(x)?.neg(),
        Term::Oplus(a, b) => term_to_pwl(a)?.oplus(&term_to_pwl(b)?),
        Term::Odot(a, b) => term_to_pwl(a)?.odot(&term_to_pwl(b)?),
        Term::Join(a, b) => term_to_pwl(a)?.join(&term_to_pwl(b)?),
        Term::Meet(a, b) => term_to_pwl(a)?.meet(&term_to_pwl(b)?),
        Term::Scalar(q, body) => term_to_pwl(body)?.scalar(q),
    }
}

/// Uniform random term over the given variables, for round-trip and
/// closure testing.
pub fn random_term<R: Rng>(rng: &mut R, depth: u32, vars: &[&str], allow_scalar: bool) -> Term {
    if depth == 0 || rng.gen_range(0..5) == 0 {
        return match rng.gen_range(0..3) {
            0 => Term::Zero,
            1 => Term::One,
            _ => Term::Var(vars[rng.gen_range(0..vars.len())].to_string()),
        };
    }
    let sub = |rng: &mut R| Box::new(random_term(rng, depth - 1, vars, allow_scalar));
    match rng.gen_range(0..if allow_scalar { 6 } else { 5 }) {
        0 => Term::Neg(sub(rng)),
        1 => Term::Oplus(sub(rng), sub(rng)),
        2 => Term::Odot(sub(rng), sub(rng)),
        3 => Term::Join(sub(rng), sub(rng)),
        4 => Term::Meet(sub(rng), sub(rng)),
        _ => {
            let d = rng.gen_range(1i64..=6);
            let n = rng.gen_range(0..=d);
            Term::Scalar(Rat::new(n.into(), d.into()), sub(rng))
        }
    }
}
