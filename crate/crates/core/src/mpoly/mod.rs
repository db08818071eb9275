//! Multivariate polynomials over `GF(p)`.

pub mod map;
pub mod matrix;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod ring;

use thiserror::Error;

pub use map::RingMap;
pub use matrix::{jacobian, minors, random_form, random_graded_matrix, PolyMatrix};
pub use monomial::{ModuleOrderKind, Monomial, MonomialOrder, TermOrder, MAX_EXPONENT, MAX_VARS};
pub use parse::{parse_ideal_file, parse_polynomial, parse_ring_header, print_ideal, IdealFile, SyntaxError};
pub use poly::{poly_arith, PolyOp, Polynomial, Term};
pub use ring::{same_ring, PolyRing, Ring};

use crate::ff::FieldError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("{0} variables requested; at most 16 are supported")]
    TooManyVariables(usize),
    #[error("variable name '{0}' used twice")]
    DuplicateVariable(String),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("polynomials from different rings")]
    RingMismatch,
    #[error("{k}x{k} minors requested of a {rows}x{cols} matrix")]
    SizeExceeded { k: usize, rows: usize, cols: usize },
    #[error("entry ({row},{col}) would need negative degree {degree}")]
    NegativeDegree { row: usize, col: usize, degree: i32 },
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// All monomials of total degree `d` in `n` variables, descending in grevlex.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    fn rec(i: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let n = exps.len();
        if i + 1 == n {
            exps[i] = left;
            out.push(Monomial::from_exponents(exps));
            exps[i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            exps[i] = e;
            rec(i + 1, left - e, exps, out);
        }
        exps[i] = 0;
    }
    if n == 0 {
        if d == 0 {
            out.push(Monomial::ONE);
        }
        return out;
    }
    rec(0, d, &mut exps, &mut out);
    let ord = MonomialOrder::Grevlex;
    out.sort_unstable_by(|a, b| ord.cmp(b, a));
    out
}

/// Number of monomials of degree `d` in `n` variables.
pub fn monomial_count(n: usize, d: u32) -> usize {
    if n == 0 {
        return usize::from(d == 0);
    }
    // C(d + n - 1, n - 1)
    let mut c: u128 = 1;
    for i in 0..(n as u128 - 1) {
        c = c * (d as u128 + 1 + i) / (i + 1);
    }
    c as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::PrimeField;

    fn ring(p: u64, n: usize) -> Ring {
        PolyRing::new(PrimeField::new(p).unwrap(), n, MonomialOrder::Grevlex).unwrap()
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials_of_degree(5, 5).len(), 126);
        assert_eq!(monomial_count(5, 5), 126);
        assert_eq!(monomial_count(5, 10), 1001);
        assert_eq!(monomials_of_degree(3, 0), vec![Monomial::ONE]);
    }

    #[test]
    fn binomial_square() {
        let r = ring(67, 2);
        let s = Polynomial::var(&r, 0).add(&Polynomial::var(&r, 1));
        assert_eq!(s.mul(&s).to_string(), "x0^2 + 2*x0*x1 + x1^2");
        assert!(s.mul(&Polynomial::zero(&r)).is_zero());
        let r2 = ring(2, 2);
        let s2 = Polynomial::var(&r2, 0).add(&Polynomial::var(&r2, 1));
        assert_eq!(s2.pow(2).to_string(), "x0^2 + x1^2");
    }

    #[test]
    fn ring_mismatch() {
        let a = Polynomial::var(&ring(67, 2), 0);
        let b = Polynomial::var(&ring(67, 3), 0);
        assert_eq!(a.try_add(&b), Err(PolyError::RingMismatch));
    }

    #[test]
    fn parse_examples() {
        let r = ring(67, 5);
        let f = parse_polynomial(&r, "x0^2 + 2*x0*x1").unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.to_string(), "x0^2 + 2*x0*x1");
        let e = parse_polynomial(&r, "x0 +").unwrap_err();
        assert_eq!((e.line, e.col), (1, 5));
        assert!(parse_polynomial(&r, "x9").is_err());
        assert_eq!(parse_polynomial(&r, "-x1 - 66").unwrap().to_string(), "-x1 + 1");
    }

    #[test]
    fn char_p_derivative() {
        let r = ring(5, 2);
        let f = Polynomial::var(&r, 0).pow(5);
        assert!(f.derivative(0).is_zero());
        let g = Polynomial::var(&r, 0).pow(2);
        assert_eq!(g.derivative(0).to_string(), "2*x0");
    }

    #[test]
    fn ideal_file() {
        let text = "# comment\nring p=67 vars=3 order=grevlex\nideal A = x0 - x1;\n  x2^2\nideal B = 3\n";
        let f = parse_ideal_file(text).unwrap();
        assert_eq!(f.ideals.len(), 2);
        assert_eq!(f.ideals[0].1.len(), 2);
        assert_eq!(f.ideals[1].1[0].as_constant(), Some(3));
        let bad = parse_ideal_file("ring p=6 vars=3 order=lex\n").unwrap_err();
        assert_eq!(bad.line, 1);
    }
}
