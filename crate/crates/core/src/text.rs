//! Text syntax for scalars and polynomials.
//!
//! Polynomial grammar: terms joined by `+`/`-`; a term is a coefficient
//! `*`-separated from `x<k>^<e>` factors, e.g.
//! `3/2*x1^2*x2 - x3 + 1/2*i*x2^4`. Variables are `x1..xN`, whitespace is
//! insignificant, and printing then parsing gives back an equal value.
//!
//! Scalar syntax is the variable-free fragment: `a/b`, `a/b+c/d*i`,
//! integer shorthand, leading `-`.
//!
//! Coefficients with both a real and an imaginary part print as two
//! summands on the same monomial (`1/2*x1 + 1/3*i*x1`), which keeps the
//! grammar free of parentheses; re-parsing sums them back.

use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};

use crate::arith::{BigRational, GaussianRational};
use crate::error::Error;
use crate::poly::{Monomial, Poly};
use crate::zonal::UniPoly;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    ImagUnit,
    Var(usize),
    Star,
    Slash,
    Caret,
    Plus,
    Minus,
}

struct Lexer<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src,
            bytes: src.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, pos: usize, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    fn read_digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn tokenize(mut self) -> Result<Vec<(usize, Token)>, Error> {
        let mut out = Vec::new();
        while self.pos < self.bytes.len() {
            let start = self.pos;
            let b = self.bytes[self.pos];
            match b {
                b' ' | b'\t' | b'\n' | b'\r' => {
                    self.pos += 1;
                }
                b'+' => {
                    self.pos += 1;
                    out.push((start, Token::Plus));
                }
                b'-' => {
                    self.pos += 1;
                    out.push((start, Token::Minus));
                }
                b'*' => {
                    self.pos += 1;
                    out.push((start, Token::Star));
                }
                b'/' => {
                    self.pos += 1;
                    out.push((start, Token::Slash));
                }
                b'^' => {
                    self.pos += 1;
                    out.push((start, Token::Caret));
                }
                b'i' => {
                    self.pos += 1;
                    out.push((start, Token::ImagUnit));
                }
                b'x' => {
                    self.pos += 1;
                    let digits = self.read_digits();
                    if digits.is_empty() {
                        return Err(self.error(start, "expected a variable index after `x`"));
                    }
                    let index: usize = digits
                        .parse()
                        .map_err(|_| self.error(start, "variable index too large"))?;
                    out.push((start, Token::Var(index)));
                }
                b'0'..=b'9' => {
                    let digits = self.read_digits();
                    let n: BigInt = digits.parse().expect("digit run parses as an integer");
                    out.push((start, Token::Int(n)));
                }
                _ => {
                    let ch = self.src[start..].chars().next().unwrap();
                    return Err(self.error(start, format!("unexpected character `{ch}`")));
                }
            }
        }
        Ok(out)
    }
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    dim: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or(self.len)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.here(),
            msg: msg.into(),
        }
    }

    fn parse_poly(&mut self) -> Result<Poly, Error> {
        let mut acc = Poly::zero(self.dim);
        let mut negative = false;
        match self.peek() {
            Some(Token::Plus) => {
                self.bump();
            }
            Some(Token::Minus) => {
                self.bump();
                negative = true;
            }
            Some(_) => {}
            None => return Err(self.error("empty input")),
        }
        loop {
            let term = self.parse_term(negative)?;
            acc = &acc + &term;
            match self.bump() {
                None => break,
                Some(Token::Plus) => negative = false,
                Some(Token::Minus) => negative = true,
                Some(_) => {
                    self.pos -= 1;
                    return Err(self.error("expected `+` or `-` between terms"));
                }
            }
        }
        Ok(acc)
    }

    fn parse_term(&mut self, negative: bool) -> Result<Poly, Error> {
        let mut coeff = if negative {
            -GaussianRational::one()
        } else {
            GaussianRational::one()
        };
        let mut exps = vec![0u32; self.dim];
        self.parse_factor(&mut coeff, &mut exps)?;
        while matches!(self.peek(), Some(Token::Star)) {
            self.bump();
            self.parse_factor(&mut coeff, &mut exps)?;
        }
        Ok(Poly::from_terms(self.dim, [(Monomial::new(exps), coeff)]))
    }

    fn parse_factor(
        &mut self,
        coeff: &mut GaussianRational,
        exps: &mut [u32],
    ) -> Result<(), Error> {
        let pos = self.here();
        match self.bump() {
            Some(Token::Int(n)) => {
                let mut value = BigRational::from_integer(n);
                if matches!(self.peek(), Some(Token::Slash)) {
                    self.bump();
                    match self.bump() {
                        Some(Token::Int(d)) => {
                            if d.is_zero() {
                                return Err(Error::Parse {
                                    pos,
                                    msg: "zero denominator".into(),
                                });
                            }
                            value /= BigRational::from_integer(d);
                        }
                        _ => return Err(self.error("expected a denominator after `/`")),
                    }
                }
                *coeff = &*coeff * &GaussianRational::from_rational(value);
            }
            Some(Token::ImagUnit) => {
                *coeff = &*coeff * &GaussianRational::i();
            }
            Some(Token::Var(index)) => {
                if index < 1 || index > self.dim {
                    return Err(Error::Parse {
                        pos,
                        msg: format!(
                            "variable index out of range: x{index} with dimension {}",
                            self.dim
                        ),
                    });
                }
                let mut e: u32 = 1;
                if matches!(self.peek(), Some(Token::Caret)) {
                    self.bump();
                    match self.bump() {
                        Some(Token::Int(n)) => {
                            e = n.try_into().map_err(|_| Error::Parse {
                                pos,
                                msg: "exponent too large".into(),
                            })?;
                        }
                        _ => return Err(self.error("expected an exponent after `^`")),
                    }
                }
                exps[index - 1] += e;
            }
            _ => {
                self.pos -= 1;
                return Err(self.error("expected a number, `i`, or a variable"));
            }
        }
        Ok(())
    }
}

/// Parses the polynomial grammar with ambient dimension `dim`.
pub fn parse_poly(src: &str, dim: usize) -> Result<Poly, Error> {
    let tokens = Lexer::new(src).tokenize()?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        dim,
        len: src.len(),
    };
    parser.parse_poly()
}

/// Parses the variable-free scalar syntax.
pub fn parse_scalar(src: &str) -> Result<GaussianRational, Error> {
    Ok(parse_poly(src, 0)?.constant_term())
}

fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// One printable summand: a rational coefficient, an optional imaginary
/// unit, and a variable part like `x1^2*x3` (empty for constants).
fn render_piece(out: &mut String, first: bool, r: &BigRational, imag: bool, vars: &str) {
    let mag = r.abs();
    if first {
        if r.is_negative() {
            out.push('-');
        }
    } else if r.is_negative() {
        out.push_str(" - ");
    } else {
        out.push_str(" + ");
    }
    let mut factors: Vec<String> = Vec::new();
    if !mag.is_one() || (!imag && vars.is_empty()) {
        factors.push(format_rational(&mag));
    }
    if imag {
        factors.push("i".into());
    }
    if !vars.is_empty() {
        factors.push(vars.into());
    }
    out.push_str(&factors.join("*"));
}

fn monomial_vars(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (j, &e) in m.exponents().iter().enumerate() {
        if e == 1 {
            parts.push(format!("x{}", j + 1));
        } else if e > 1 {
            parts.push(format!("x{}^{}", j + 1, e));
        }
    }
    parts.join("*")
}

/// Canonical rendering: terms in descending graded-lex order, complex
/// coefficients split into a real and an imaginary summand.
pub fn format_poly(p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    let mut first = true;
    let terms: Vec<_> = p.terms().collect();
    for (m, c) in terms.into_iter().rev() {
        let vars = monomial_vars(m);
        if !c.re().is_zero() {
            render_piece(&mut out, first, c.re(), false, &vars);
            first = false;
        }
        if !c.im().is_zero() {
            render_piece(&mut out, first, c.im(), true, &vars);
            first = false;
        }
    }
    out
}

/// Renders a one-variable polynomial in the indeterminate `y`, highest
/// power first, e.g. `y^2 - 1/3`.
pub fn format_unipoly(q: &UniPoly) -> String {
    if q.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    let mut first = true;
    for k in (0..q.coeffs().len()).rev() {
        let c = &q.coeffs()[k];
        if c.is_zero() {
            continue;
        }
        let vars = match k {
            0 => String::new(),
            1 => "y".into(),
            _ => format!("y^{k}"),
        };
        if !c.re().is_zero() {
            render_piece(&mut out, first, c.re(), false, &vars);
            first = false;
        }
        if !c.im().is_zero() {
            render_piece(&mut out, first, c.im(), true, &vars);
            first = false;
        }
    }
    out
}
