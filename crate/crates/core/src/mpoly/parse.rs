//! Text format for polynomials, rings and ideals.
//!
//! ```text
//! ring p=67 vars=5 order=grevlex
//! ideal J = x0^2 - 3*x1*x2; x3*x4 + 5
//! ```

use std::fmt;

use super::monomial::{Monomial, MonomialOrder};
use super::poly::{Polynomial, Term};
use super::ring::{PolyRing, Ring};
use super::PolyError;
use crate::ff::PrimeField;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("syntax error at line {line}, column {col}: {msg}")]
pub struct SyntaxError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

struct Lexer<'a> {
    src: &'a [u8],
    i: usize,
    line: usize,
    line_start: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str, line: usize) -> Self {
        Lexer { src: src.as_bytes(), i: 0, line, line_start: 0 }
    }

    fn err(&self, msg: impl Into<String>) -> SyntaxError {
        SyntaxError { line: self.line, col: self.i - self.line_start + 1, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.i < self.src.len() {
            match self.src[self.i] {
                b'\n' => {
                    self.i += 1;
                    self.line += 1;
                    self.line_start = self.i;
                }
                b' ' | b'\t' | b'\r' => self.i += 1,
                _ => break,
            }
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.i).copied()
    }

    fn number(&mut self) -> Result<u64, SyntaxError> {
        self.skip_ws();
        let start = self.i;
        while self.i < self.src.len() && self.src[self.i].is_ascii_digit() {
            self.i += 1;
        }
        if start == self.i {
            return Err(self.err("expected a number"));
        }
        let s = std::str::from_utf8(&self.src[start..self.i]).unwrap();
        s.parse().map_err(|_| SyntaxError { line: self.line, col: start - self.line_start + 1, msg: "number too large".into() })
    }
}

/// Parse a polynomial in `ring`. Variables are written `x<i>` or by the
/// ring's variable names.
pub fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial, SyntaxError> {
    parse_polynomial_at(ring, text, 1)
}

fn parse_polynomial_at(ring: &Ring, text: &str, line: usize) -> Result<Polynomial, SyntaxError> {
    let mut lx = Lexer::new(text, line);
    let f = ring.field();
    let mut terms: Vec<Term> = Vec::new();
    let mut first = true;
    loop {
        let sign_neg = match lx.peek() {
            None if first => return Err(lx.err("empty polynomial")),
            None => break,
            Some(b'+') => {
                lx.i += 1;
                false
            }
            Some(b'-') => {
                lx.i += 1;
                true
            }
            Some(_) if first => false,
            Some(c) => return Err(lx.err(format!("expected '+' or '-', found '{}'", c as char))),
        };
        first = false;
        let (m, c) = parse_term(ring, &mut lx)?;
        let c = if sign_neg { f.neg(c) } else { c };
        if c != 0 {
            terms.push(Term { m, c });
        }
    }
    Ok(Polynomial::from_terms(ring, terms))
}

fn parse_term(ring: &Ring, lx: &mut Lexer) -> Result<(Monomial, u32), SyntaxError> {
    let f = ring.field();
    let mut coeff = 1u32;
    let mut exps = vec![0u32; ring.nvars()];
    let mut need_factor = true;
    let mut any = false;
    loop {
        match lx.peek() {
            Some(c) if c.is_ascii_digit() => {
                let v = lx.number()?;
                coeff = f.mul(coeff, f.reduce_u64(v));
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = lx.i;
                while lx.i < lx.src.len() && (lx.src[lx.i].is_ascii_alphanumeric() || lx.src[lx.i] == b'_') {
                    lx.i += 1;
                }
                let name = std::str::from_utf8(&lx.src[start..lx.i]).unwrap();
                let idx = ring.var_index(name).ok_or_else(|| SyntaxError {
                    line: lx.line,
                    col: start - lx.line_start + 1,
                    msg: format!("unknown variable '{name}'"),
                })?;
                let mut e = 1u64;
                if lx.peek() == Some(b'^') {
                    lx.i += 1;
                    e = lx.number()?;
                }
                if exps[idx] as u64 + e > super::monomial::MAX_EXPONENT as u64 {
                    return Err(lx.err("exponent too large"));
                }
                exps[idx] += e as u32;
            }
            Some(c) if need_factor => {
                return Err(lx.err(format!("expected a coefficient or variable, found '{}'", c as char)));
            }
            None if need_factor => return Err(lx.err("expected a coefficient or variable, found end of input")),
            _ => break,
        }
        any = true;
        need_factor = false;
        if lx.peek() == Some(b'*') {
            lx.i += 1;
            need_factor = true;
        }
    }
    debug_assert!(any);
    Ok((Monomial::from_exponents(&exps), coeff))
}

/// Print in the grammar accepted by [`parse_polynomial`].
pub fn print_polynomial(p: &Polynomial) -> String {
    p.to_string()
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let ring = self.ring();
        let field = ring.field();
        for (k, t) in self.terms().iter().enumerate() {
            let s = field.signed(t.c);
            let (neg, mag) = if s < 0 { (true, (-s) as u64) } else { (false, s as u64) };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            for i in 0..ring.nvars() {
                let e = t.m.exp(i);
                match e {
                    0 => {}
                    1 => factors.push(ring.names()[i].clone()),
                    _ => factors.push(format!("{}^{}", ring.names()[i], e)),
                }
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == 1 {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Parse a ring header `ring p=<prime> vars=<n> order=<grevlex|lex|elim:<k>>`.
pub fn parse_ring_header(line: &str, line_no: usize) -> Result<Ring, SyntaxError> {
    let err = |msg: String| SyntaxError { line: line_no, col: 1, msg };
    let mut words = line.split_whitespace();
    if words.next() != Some("ring") {
        return Err(err("expected 'ring'".into()));
    }
    let mut p = None;
    let mut n = None;
    let mut order = MonomialOrder::Grevlex;
    for w in words {
        let col = line.find(w).unwrap_or(0) + 1;
        let err = |msg: String| SyntaxError { line: line_no, col, msg };
        let (k, v) = w.split_once('=').ok_or_else(|| err(format!("expected key=value, found '{w}'")))?;
        match k {
            "p" => p = Some(v.parse::<u64>().map_err(|_| err(format!("bad prime '{v}'")))?),
            "vars" => n = Some(v.parse::<usize>().map_err(|_| err(format!("bad variable count '{v}'")))?),
            "order" => order = MonomialOrder::parse(v).ok_or_else(|| err(format!("unknown order '{v}'")))?,
            _ => return Err(err(format!("unknown key '{k}'"))),
        }
    }
    let p = p.ok_or_else(|| err("missing p=".into()))?;
    let n = n.ok_or_else(|| err("missing vars=".into()))?;
    let field = PrimeField::new(p).map_err(|e| err(e.to_string()))?;
    PolyRing::new(field, n, order).map_err(|e: PolyError| err(e.to_string()))
}

/// A parsed input file: a ring and named generator lists.
#[derive(Clone, Debug)]
pub struct IdealFile {
    pub ring: Ring,
    pub ideals: Vec<(String, Vec<Polynomial>)>,
}

/// Parse a ring header followed by `ideal <name> = <poly>; <poly>; ...`
/// declarations, which may span lines. Lines starting with `#` are comments.
pub fn parse_ideal_file(text: &str) -> Result<IdealFile, SyntaxError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| {
        let t = l.trim();
        !t.is_empty() && !t.starts_with('#')
    });
    let (hline, header) = lines.next().ok_or(SyntaxError { line: 1, col: 1, msg: "missing ring header".into() })?;
    let ring = parse_ring_header(header, hline + 1)?;
    let mut ideals = Vec::new();
    // Gather declarations; a declaration starts with 'ideal'.
    let mut current: Option<(String, String, usize)> = None;
    let finish = |cur: Option<(String, String, usize)>, ideals: &mut Vec<(String, Vec<Polynomial>)>| -> Result<(), SyntaxError> {
        if let Some((name, body, line)) = cur {
            let mut gens = Vec::new();
            for (k, piece) in body.split(';').enumerate() {
                if piece.trim().is_empty() {
                    continue;
                }
                let extra = body.split(';').take(k).map(|s| s.matches('\n').count()).sum::<usize>();
                gens.push(parse_polynomial_at(&ring, piece, line + extra)?);
            }
            ideals.push((name, gens));
        }
        Ok(())
    };
    for (ln, l) in lines {
        let t = l.trim();
        if let Some(rest) = t.strip_prefix("ideal ") {
            finish(current.take(), &mut ideals)?;
            let (name, body) = rest.split_once('=').ok_or(SyntaxError {
                line: ln + 1,
                col: 1,
                msg: "expected 'ideal <name> = ...'".into(),
            })?;
            current = Some((name.trim().to_string(), body.to_string(), ln + 1));
        } else if let Some((_, body, _)) = current.as_mut() {
            body.push('\n');
            body.push_str(l);
        } else {
            return Err(SyntaxError { line: ln + 1, col: 1, msg: "expected 'ideal'".into() });
        }
    }
    finish(current, &mut ideals)?;
    Ok(IdealFile { ring, ideals })
}

/// Print generators in the ideal file format.
pub fn print_ideal(name: &str, gens: &[Polynomial]) -> String {
    let body: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
    format!("ideal {} = {}", name, body.join(";\n  "))
}
