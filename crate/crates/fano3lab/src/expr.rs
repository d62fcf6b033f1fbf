//! Parser for exact scalar and polynomial expressions on the command line.
//!
//! Grammar (multiplication is always explicit):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := ('-' | '+')* base ('^' ('-')? integer)?
//! base   := integer | ident | '(' expr ')'
//! ```
//!
//! Identifiers are the declared variables, `i` for a primitive fourth root
//! of unity, and `zetaN` for a primitive N-th root. Division and negative
//! exponents require constant operands.

use std::collections::BTreeMap;

use fano3lab_core::exactfield::CycNum;
use fano3lab_core::planecurves::PLANE_VARS;
use fano3lab_core::polyalg::{BinaryForm, MultiPoly};

const MAX_EXPONENT: i64 = 64;

/// Sparse polynomial over a fixed variable list, used only while parsing.
#[derive(Debug, Clone)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, CycNum>,
}

impl Poly {
    fn constant(nvars: usize, c: CycNum) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; nvars], c);
        }
        Poly { nvars, terms }
    }

    fn var(nvars: usize, i: usize) -> Poly {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(e, CycNum::one());
        Poly { nvars, terms }
    }

    fn insert(&mut self, e: Vec<u32>, c: CycNum) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn add(&self, o: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.insert(e.clone(), c.clone());
        }
        out
    }

    fn neg(&self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.neg()))
                .collect(),
        }
    }

    fn mul(&self, o: &Poly) -> Poly {
        let mut out = Poly {
            nvars: self.nvars,
            terms: BTreeMap::new(),
        };
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert(e, c1.mul(c2));
            }
        }
        out
    }

    fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::constant(self.nvars, CycNum::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    fn as_constant(&self) -> Option<CycNum> {
        if self.terms.is_empty() {
            return Some(CycNum::zero());
        }
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            if e.iter().all(|&k| k == 0) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &CycNum)> {
        self.terms.iter()
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<Tok>, String> {
    let mut toks = Vec::new();
    let mut it = src.chars().peekable();
    while let Some(&ch) = it.peek() {
        match ch {
            ' ' | '\t' | '\n' | '\r' => {
                it.next();
            }
            '+' => {
                it.next();
                toks.push(Tok::Plus);
            }
            '-' => {
                it.next();
                toks.push(Tok::Minus);
            }
            '*' => {
                it.next();
                toks.push(Tok::Star);
            }
            '/' => {
                it.next();
                toks.push(Tok::Slash);
            }
            '^' => {
                it.next();
                toks.push(Tok::Caret);
            }
            '(' => {
                it.next();
                toks.push(Tok::LParen);
            }
            ')' => {
                it.next();
                toks.push(Tok::RParen);
            }
            '0'..='9' => {
                let mut n: i64 = 0;
                while let Some(&d) = it.peek() {
                    if let Some(v) = d.to_digit(10) {
                        n = n
                            .checked_mul(10)
                            .and_then(|m| m.checked_add(v as i64))
                            .ok_or_else(|| String::from("integer literal too large"))?;
                        it.next();
                    } else {
                        break;
                    }
                }
                toks.push(Tok::Int(n));
            }
            c if c.is_ascii_alphabetic() => {
                let mut s = String::new();
                while let Some(&d) = it.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        s.push(d);
                        it.next();
                    } else {
                        break;
                    }
                }
                toks.push(Tok::Ident(s));
            }
            other => return Err(format!("unexpected character {other:?}")),
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    vars: &'a [&'a str],
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Poly, String> {
        let mut acc = self.term()?;
        while let Some(tok) = self.peek() {
            match tok {
                Tok::Plus => {
                    self.next();
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.next();
                    acc = acc.add(&self.term()?.neg());
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly, String> {
        let mut acc = self.factor()?;
        while let Some(tok) = self.peek() {
            match tok {
                Tok::Star => {
                    self.next();
                    acc = acc.mul(&self.factor()?);
                }
                Tok::Slash => {
                    self.next();
                    let rhs = self.factor()?;
                    let c = rhs
                        .as_constant()
                        .ok_or_else(|| String::from("division by a non-constant"))?;
                    let inv = CycNum::one()
                        .div(&c)
                        .map_err(|_| String::from("division by zero"))?;
                    acc = acc.mul(&Poly::constant(acc.nvars, inv));
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly, String> {
        let mut sign = false;
        while let Some(tok) = self.peek() {
            match tok {
                Tok::Minus => {
                    sign = !sign;
                    self.next();
                }
                Tok::Plus => {
                    self.next();
                }
                _ => break,
            }
        }
        let base = self.base()?;
        let powed = if self.peek() == Some(&Tok::Caret) {
            self.next();
            let mut neg = false;
            if self.peek() == Some(&Tok::Minus) {
                neg = true;
                self.next();
            }
            let e = match self.next() {
                Some(Tok::Int(n)) => n,
                _ => return Err(String::from("expected an integer exponent after ^")),
            };
            if e > MAX_EXPONENT {
                return Err(format!("exponent exceeds {MAX_EXPONENT}"));
            }
            if neg {
                let c = base
                    .as_constant()
                    .ok_or_else(|| String::from("negative power of a non-constant"))?;
                let v = c
                    .pow(-e)
                    .map_err(|_| String::from("negative power of zero"))?;
                Poly::constant(base.nvars, v)
            } else {
                base.pow(e as u32)
            }
        } else {
            base
        };
        Ok(if sign { powed.neg() } else { powed })
    }

    fn base(&mut self) -> Result<Poly, String> {
        match self.next() {
            Some(Tok::Int(n)) => Ok(Poly::constant(self.vars.len(), CycNum::from_int(n))),
            Some(Tok::Ident(name)) => self.ident(&name),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(String::from("missing closing parenthesis")),
                }
            }
            other => Err(format!("unexpected token {other:?}")),
        }
    }

    fn ident(&mut self, name: &str) -> Result<Poly, String> {
        if let Some(i) = self.vars.iter().position(|v| *v == name) {
            return Ok(Poly::var(self.vars.len(), i));
        }
        if name == "i" {
            return Ok(Poly::constant(self.vars.len(), CycNum::zeta(4)));
        }
        if let Some(rest) = name.strip_prefix("zeta") {
            let n: u32 = rest
                .parse()
                .map_err(|_| format!("bad root-of-unity order in {name:?}"))?;
            if n == 0 {
                return Err(String::from("zeta0 is not defined"));
            }
            return Ok(Poly::constant(self.vars.len(), CycNum::zeta(n)));
        }
        Err(format!("unknown identifier {name:?}"))
    }
}

pub fn parse_poly(src: &str, vars: &[&str]) -> Result<Poly, String> {
    let toks = tokenize(src)?;
    if toks.is_empty() {
        return Err(String::from("empty expression"));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        vars,
    };
    let poly = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(format!("trailing input at token {}", p.pos));
    }
    Ok(poly)
}

pub fn parse_scalar(src: &str) -> Result<CycNum, String> {
    let p = parse_poly(src, &[])?;
    p.as_constant()
        .ok_or_else(|| String::from("expected a constant expression"))
}

/// Parse a homogeneous form in `x, y`. A zero expression parses as the zero
/// form of degree 0 so that domain-level checks can reject it by name.
pub fn parse_binary_form(src: &str) -> Result<BinaryForm, String> {
    let p = parse_poly(src, &["x", "y"])?;
    let mut degree: Option<u32> = None;
    for (e, _) in p.terms() {
        let d = e[0] + e[1];
        match degree {
            None => degree = Some(d),
            Some(prev) if prev != d => {
                return Err(String::from("form is not homogeneous"));
            }
            _ => {}
        }
    }
    let Some(d) = degree else {
        return Ok(BinaryForm::zero(0));
    };
    let mut coeffs = vec![CycNum::zero(); d as usize + 1];
    for (e, c) in p.terms() {
        coeffs[e[1] as usize] = c.clone();
    }
    Ok(BinaryForm::from_coeffs(coeffs))
}

/// Parse a polynomial in the plane coordinates `c0, c1, c2`.
pub fn parse_ternary(src: &str) -> Result<MultiPoly, String> {
    let vars: Vec<&str> = PLANE_VARS.to_vec();
    let p = parse_poly(src, &vars)?;
    let mut out = MultiPoly::zero(&vars);
    for (e, c) in p.terms() {
        let mut mono = MultiPoly::constant(&vars, c.clone());
        for (i, &k) in e.iter().enumerate() {
            mono = mono.mul(&MultiPoly::var(&vars, i).pow(k));
        }
        out = out.add(&mono);
    }
    Ok(out)
}

/// Parse a projective point `a:b:c` of scalar expressions.
pub fn parse_point(src: &str) -> Result<[CycNum; 3], String> {
    let parts: Vec<&str> = src.split(':').collect();
    if parts.len() != 3 {
        return Err(String::from("expected a point of the form a:b:c"));
    }
    Ok([
        parse_scalar(parts[0])?,
        parse_scalar(parts[1])?,
        parse_scalar(parts[2])?,
    ])
}

/// Parse a comma-separated row-major scalar list into a matrix of the given
/// shape.
pub fn parse_matrix(
    src: &str,
    rows: usize,
    cols: usize,
) -> Result<fano3lab_core::linalg::Matrix<CycNum>, String> {
    let entries: Vec<CycNum> = src
        .split(',')
        .map(parse_scalar)
        .collect::<Result<_, _>>()?;
    if entries.len() != rows * cols {
        return Err(format!(
            "expected {} entries for a {rows}x{cols} matrix, got {}",
            rows * cols,
            entries.len()
        ));
    }
    Ok(fano3lab_core::linalg::Matrix::new(rows, cols, entries))
}

/// Parse a semicolon-separated list of 6x6 matrices.
pub fn parse_matrix_list(
    src: &str,
) -> Result<Vec<fano3lab_core::linalg::Matrix<CycNum>>, String> {
    src.split(';').map(|m| parse_matrix(m, 6, 6)).collect()
}
