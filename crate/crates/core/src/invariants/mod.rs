//! Hilbert series, Hilbert polynomials and the numerical invariants
//! derived from them (dimension, degree, arithmetic genus), plus the
//! smoothness test.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::idealops::{singular, Ideal, IdealError};
use crate::mpoly::Monomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantsError {
    #[error("the zero ideal has no genus")]
    ZeroIdealNoGenus,
    #[error("genus is defined here for curves only; dimension is {0}")]
    NotACurve(i64),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// Hilbert series `numerator(t) / (1-t)^n` of `R/I` and what follows from it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    pub nvars: usize,
    /// Coefficients of the numerator over `(1-t)^n`, lowest power first.
    pub numerator: Vec<i64>,
    /// Numerator after cancelling all factors `(1-t)`.
    pub reduced: Vec<i64>,
    /// Krull dimension of `R/I` (affine cone).
    pub cone_dim: usize,
    /// Projective dimension; `-1` for the empty variety.
    pub dim: i64,
    pub degree: i64,
    /// `hilbert_polynomial(d) = sum_k hp[k] d^k / hp_denominator`.
    pub hp: Vec<i128>,
    pub hp_denominator: i128,
}

impl HilbertData {
    /// Value of the Hilbert function at `d` from the series.
    pub fn hilbert_function(&self, d: i64) -> i64 {
        let n = self.nvars as i64;
        self.numerator
            .iter()
            .enumerate()
            .map(|(k, &c)| if d - k as i64 >= 0 { c * binom(d - k as i64 + n - 1, n - 1) as i64 } else { 0 })
            .sum()
    }

    /// Exact value of the Hilbert polynomial at `d`.
    pub fn hilbert_polynomial(&self, d: i64) -> i128 {
        let mut acc: i128 = 0;
        for c in self.hp.iter().rev() {
            acc = acc * d as i128 + c;
        }
        acc / self.hp_denominator
    }

    /// Arithmetic genus `1 - HP(0)` of a curve.
    pub fn genus(&self) -> Option<i64> {
        (self.dim == 1).then(|| 1 - self.hilbert_polynomial(0) as i64)
    }
}

fn binom(n: i64, k: i64) -> i128 {
    if k < 0 || n < k {
        return 0;
    }
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) as i128 / (i + 1) as i128;
    }
    r
}

/// Numerator of the Hilbert series of `R/M` for a monomial ideal `M`, by
/// splitting on a pivot `p`: `N(M) = N(M + (p)) + t^deg(p) N(M : p)`.
pub fn monomial_numerator(gens: &[Monomial], weights: &[u32]) -> Vec<i64> {
    let mut g: Vec<Monomial> = gens.iter().map(|m| m.with_pos(0)).collect();
    minimalize(&mut g);
    let mut out = numerator_rec(g, weights);
    trim(&mut out);
    out
}

fn minimalize(g: &mut Vec<Monomial>) {
    g.sort_by_key(|m| m.degree());
    g.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(g.len());
    for m in g.drain(..) {
        if !kept.iter().any(|k| k.divides(&m)) {
            kept.push(m);
        }
    }
    *g = kept;
}

fn wdeg(m: &Monomial, w: &[u32]) -> usize {
    m.weighted_degree(w) as usize
}

fn poly_add(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (k, &c) in b.iter().enumerate() {
        a[k + shift] += c;
    }
}

fn trim(a: &mut Vec<i64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn numerator_rec(g: Vec<Monomial>, w: &[u32]) -> Vec<i64> {
    if g.is_empty() {
        return vec![1];
    }
    if g.iter().any(|m| m.is_one()) {
        return Vec::new();
    }
    // Pairwise coprime generators: a complete intersection.
    let coprime = g.iter().enumerate().all(|(i, a)| g[i + 1..].iter().all(|b| a.coprime(b)));
    if coprime {
        let mut acc = vec![1i64];
        for m in &g {
            let d = wdeg(m, w);
            let mut next = acc.clone();
            let neg: Vec<i64> = acc.iter().map(|c| -c).collect();
            poly_add(&mut next, &neg, d);
            acc = next;
        }
        return acc;
    }
    // Pivot on the variable occurring in most non-coprime generators.
    let nv = w.len();
    let mut counts = vec![0usize; nv];
    for m in &g {
        if m.degree() > 0 && !g.iter().all(|b| b == m || b.coprime(m)) {
            for (v, c) in counts.iter_mut().enumerate() {
                if m.exp(v) > 0 {
                    *c += 1;
                }
            }
        }
    }
    let v = (0..nv).max_by_key(|&v| counts[v]).unwrap();
    let mut exps: Vec<u32> = g.iter().map(|m| m.exp(v)).filter(|&e| e > 0).collect();
    exps.sort_unstable();
    // x_v^e must not already lie in M, or M + (p) = M.
    let pure = g.iter().filter(|m| m.exp(v) == m.degree()).map(|m| m.exp(v)).min().unwrap_or(u32::MAX);
    let e = exps[exps.len() / 2].min(pure - 1).max(1);
    let mut pe = vec![0u32; nv];
    pe[v] = e;
    let p = Monomial::from_exponents(&pe);
    // M + (p)
    let mut plus: Vec<Monomial> = g.iter().copied().filter(|m| !p.divides(m)).collect();
    plus.push(p);
    minimalize(&mut plus);
    // M : p
    let mut colon: Vec<Monomial> = g
        .iter()
        .map(|m| {
            let mut x = m.exponents(nv);
            x[v] = x[v].saturating_sub(e);
            Monomial::from_exponents(&x)
        })
        .collect();
    minimalize(&mut colon);
    let mut a = numerator_rec(plus, w);
    let b = numerator_rec(colon, w);
    poly_add(&mut a, &b, wdeg(&p, w));
    a
}

/// Hilbert data of `R/I` from the lead terms of its Groebner basis.
pub fn hilbert_series(i: &Ideal) -> HilbertData {
    let ring = i.ring();
    let n = ring.nvars();
    let numerator = monomial_numerator(&i.gb().lead_monomials(), ring.grading());
    hilbert_from_numerator(n, numerator)
}

/// Cancel `(1-t)` factors and derive the Hilbert polynomial.
pub fn hilbert_from_numerator(n: usize, numerator: Vec<i64>) -> HilbertData {
    let mut reduced = numerator.clone();
    let mut cone_dim = n;
    if reduced.is_empty() {
        cone_dim = 0;
    }
    while cone_dim > 0 && reduced.iter().sum::<i64>() == 0 {
        // Divide by (1 - t): q_k = sum_{j<=k} a_j.
        let mut q = Vec::with_capacity(reduced.len());
        let mut acc = 0;
        for &c in &reduced[..reduced.len() - 1] {
            acc += c;
            q.push(acc);
        }
        reduced = q;
        trim(&mut reduced);
        cone_dim -= 1;
    }
    let degree: i64 = if cone_dim == 0 && numerator.is_empty() { 0 } else { reduced.iter().sum() };
    // HP(d) = sum_k q_k C(d - k + D - 1, D - 1), expanded in powers of d.
    let dd = cone_dim as i64;
    let (hp, hp_denominator) = if dd == 0 {
        (vec![0], 1)
    } else {
        let fact: i128 = (1..dd as i128).product::<i128>().max(1);
        let mut coeffs = vec![0i128; dd as usize];
        for (k, &q) in reduced.iter().enumerate() {
            // prod_{j=1}^{D-1} (d - k + j)
            let mut poly = vec![1i128];
            for j in 1..dd {
                let c = j - k as i64;
                let mut next = vec![0i128; poly.len() + 1];
                for (a, &x) in poly.iter().enumerate() {
                    next[a] += x * c as i128;
                    next[a + 1] += x;
                }
                poly = next;
            }
            for (a, x) in poly.iter().enumerate() {
                coeffs[a] += x * q as i128;
            }
        }
        (coeffs, fact)
    };
    HilbertData { nvars: n, numerator, reduced, cone_dim, dim: cone_dim as i64 - 1, degree, hp, hp_denominator }
}

/// Projective dimension, degree and (for curves) arithmetic genus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumericInvariants {
    pub dim: i64,
    pub degree: i64,
    pub genus: Option<i64>,
}

/// Invariants of `V(I)`; `I` should be saturated.
pub fn numeric_invariants(i: &Ideal) -> NumericInvariants {
    let h = hilbert_series(i);
    NumericInvariants { dim: h.dim, degree: h.degree, genus: h.genus() }
}

pub fn dim(i: &Ideal) -> i64 {
    hilbert_series(i).dim
}

pub fn degree(i: &Ideal) -> i64 {
    hilbert_series(i).degree
}

/// Arithmetic genus of a curve.
pub fn genus(i: &Ideal) -> Result<i64, InvariantsError> {
    if i.is_zero() {
        return Err(InvariantsError::ZeroIdealNoGenus);
    }
    let h = hilbert_series(i);
    h.genus().ok_or(InvariantsError::NotACurve(h.dim))
}

/// Whether `V(I)` is smooth: the singular locus saturates to the unit
/// ideal. `I` should be saturated and equidimensional.
pub fn is_smooth(i: &Ideal) -> Result<bool, InvariantsError> {
    Ok(singular::is_smooth(i)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::PrimeField;
    use crate::mpoly::{parse_polynomial, MonomialOrder, PolyRing, Ring};

    fn ring(n: usize) -> Ring {
        PolyRing::new(PrimeField::new(67).unwrap(), n, MonomialOrder::Grevlex).unwrap()
    }

    fn ideal(r: &Ring, s: &[&str]) -> Ideal {
        Ideal::new(r, s.iter().map(|x| parse_polynomial(r, x).unwrap()).collect()).unwrap()
    }

    #[test]
    fn trivial_series() {
        let r = ring(5);
        assert!(hilbert_series(&Ideal::unit(&r)).numerator.is_empty());
        let z = hilbert_series(&Ideal::zero(&r));
        assert_eq!(z.numerator, vec![1]);
        assert_eq!(z.dim, 4);
        assert_eq!(z.degree, 1);
    }

    #[test]
    fn twisted_cubic() {
        let r = ring(4);
        let i = ideal(&r, &["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"]);
        let n = numeric_invariants(&i);
        assert_eq!(n, NumericInvariants { dim: 1, degree: 3, genus: Some(0) });
        let h = hilbert_series(&i);
        for d in 0..8 {
            assert_eq!(h.hilbert_function(d), i.hilbert_function(d as u32) as i64);
            if d >= 1 {
                assert_eq!(h.hilbert_polynomial(d), 3 * d as i128 + 1);
            }
        }
    }

    #[test]
    fn plane_cubic_genus_one() {
        let r = ring(3);
        let i = ideal(&r, &["x0^3 + x1^3 + x2^3"]);
        assert_eq!(genus(&i).unwrap(), 1);
        assert_eq!(genus(&Ideal::zero(&r)), Err(InvariantsError::ZeroIdealNoGenus));
    }
}
