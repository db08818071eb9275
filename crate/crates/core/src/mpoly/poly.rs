use std::cmp::Ordering;
use std::fmt;

use super::monomial::{Monomial, TermOrder};
use super::ring::{same_ring, Ring};
use super::PolyError;
use crate::ff::{FieldElement, PrimeField};

/// A term: monomial and nonzero coefficient (canonical representative).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub m: Monomial,
    pub c: u32,
}

impl Term {
    pub fn new(m: Monomial, c: u32) -> Self {
        Term { m, c }
    }
}

/// A polynomial in canonical form: terms strictly descending in the
/// ring's order, no zero coefficients.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, o: &Self) -> bool {
        self.terms == o.terms && same_ring(&self.ring, &o.ring)
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Sort terms descending, merge equal monomials, drop zeros.
pub(crate) fn canonicalize(field: PrimeField, order: &TermOrder, mut terms: Vec<Term>) -> Vec<Term> {
    terms.sort_unstable_by(|a, b| order.cmp(&b.m, &a.m));
    let mut out: Vec<Term> = Vec::with_capacity(terms.len());
    for t in terms {
        if let Some(last) = out.last_mut() {
            if last.m == t.m {
                last.c = field.add(last.c, t.c);
                if last.c == 0 {
                    out.pop();
                }
                continue;
            }
        }
        if t.c % field.p() != 0 {
            out.push(Term { m: t.m, c: t.c % field.p() });
        }
    }
    out
}

/// `a + s*b` on sorted term vectors.
pub(crate) fn merge_add(field: PrimeField, order: &TermOrder, a: &[Term], b: &[Term], s: u32) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match order.cmp(&a[i].m, &b[j].m) {
            Ordering::Greater => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Less => {
                let c = field.mul(s, b[j].c);
                if c != 0 {
                    out.push(Term { m: b[j].m, c });
                }
                j += 1;
            }
            Ordering::Equal => {
                let c = field.add(a[i].c, field.mul(s, b[j].c));
                if c != 0 {
                    out.push(Term { m: a[i].m, c });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for t in &b[j..] {
        let c = field.mul(s, t.c);
        if c != 0 {
            out.push(Term { m: t.m, c });
        }
    }
    out
}

/// Product of term vectors, canonicalized.
pub(crate) fn mul_terms(field: PrimeField, order: &TermOrder, a: &[Term], b: &[Term]) -> Vec<Term> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let (small, big) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if small.len() <= 4 {
        let mut acc: Vec<Term> = Vec::new();
        for t in small {
            let row: Vec<Term> =
                big.iter().map(|u| Term { m: t.m.mul(&u.m), c: field.mul(t.c, u.c) }).collect();
            acc = merge_add(field, order, &acc, &row, 1);
        }
        return acc;
    }
    let mut all = Vec::with_capacity(a.len() * b.len());
    for t in a {
        for u in b {
            all.push(Term { m: t.m.mul(&u.m), c: field.mul(t.c, u.c) });
        }
    }
    canonicalize(field, order, all)
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, 1)
    }

    pub fn constant(ring: &Ring, c: i64) -> Self {
        Self::monomial(ring, Monomial::ONE, c)
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        assert!(i < ring.nvars(), "variable index {i} out of range");
        Self::monomial(ring, Monomial::var(i), 1)
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: i64) -> Self {
        let c = ring.field().reduce_i64(c);
        let terms = if c == 0 { Vec::new() } else { vec![Term { m, c }] };
        Polynomial { ring: ring.clone(), terms }
    }

    /// From arbitrary terms (any order, duplicates allowed).
    pub fn from_terms(ring: &Ring, terms: Vec<Term>) -> Self {
        let order = ring.term_order();
        Polynomial { terms: canonicalize(ring.field(), &order, terms), ring: ring.clone() }
    }

    /// From terms already strictly descending with nonzero reduced coefficients.
    pub(crate) fn from_sorted(ring: &Ring, terms: Vec<Term>) -> Self {
        Polynomial { ring: ring.clone(), terms }
    }

    /// From `(exponents, coefficient)` pairs.
    pub fn from_exponents(ring: &Ring, terms: &[(Vec<u32>, i64)]) -> Self {
        let f = ring.field();
        let ts = terms
            .iter()
            .map(|(e, c)| Term { m: Monomial::from_exponents(e), c: f.reduce_i64(*c) })
            .collect();
        Self::from_terms(ring, ts)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn field(&self) -> PrimeField {
        self.ring.field()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.m)
    }

    /// Constant polynomial value, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<u32> {
        match self.terms.as_slice() {
            [] => Some(0),
            [t] if t.m.is_one() => Some(t.c),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    /// Maximal grading degree of a term, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        let w = self.ring.grading();
        self.terms.iter().map(|t| t.m.weighted_degree(w)).max()
    }

    /// Whether all terms have the same grading degree (zero counts as homogeneous).
    pub fn is_homogeneous(&self) -> bool {
        let w = self.ring.grading();
        let mut it = self.terms.iter().map(|t| t.m.weighted_degree(w));
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    fn check(&self, o: &Polynomial) -> Result<(), PolyError> {
        if same_ring(&self.ring, &o.ring) {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    pub fn try_add(&self, o: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check(o)?;
        Ok(self.add(o))
    }

    pub fn try_sub(&self, o: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check(o)?;
        Ok(self.sub(o))
    }

    pub fn try_mul(&self, o: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check(o)?;
        Ok(self.mul(o))
    }

    /// Sum; panics on ring mismatch (use [`Polynomial::try_add`] to check).
    pub fn add(&self, o: &Polynomial) -> Polynomial {
        self.add_scaled(o, 1)
    }

    pub fn sub(&self, o: &Polynomial) -> Polynomial {
        let f = self.field();
        self.add_scaled(o, f.neg(1 % f.p()))
    }

    /// `self + s * o`
    pub fn add_scaled(&self, o: &Polynomial, s: u32) -> Polynomial {
        debug_assert!(same_ring(&self.ring, &o.ring));
        let order = self.ring.term_order();
        let terms = merge_add(self.field(), &order, &self.terms, &o.terms, s);
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn mul(&self, o: &Polynomial) -> Polynomial {
        debug_assert!(same_ring(&self.ring, &o.ring));
        let order = self.ring.term_order();
        Polynomial { ring: self.ring.clone(), terms: mul_terms(self.field(), &order, &self.terms, &o.terms) }
    }

    pub fn neg(&self) -> Polynomial {
        let f = self.field();
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|t| Term { m: t.m, c: f.neg(t.c) }).collect() }
    }

    pub fn scale(&self, s: u32) -> Polynomial {
        let f = self.field();
        let s = s % f.p();
        if s == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|t| Term { m: t.m, c: f.mul(s, t.c) }).collect() }
    }

    /// Multiply by a monomial (order is preserved, so no re-sorting).
    pub fn mul_monomial(&self, m: &Monomial, c: u32) -> Polynomial {
        let f = self.field();
        let c = c % f.p();
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|t| Term { m: t.m.mul(m), c: f.mul(c, t.c) }).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Scale so the leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some(t) => {
                let inv = self.field().inv(t.c).expect("nonzero lead");
                self.scale(inv)
            }
        }
    }

    /// Partial derivative in characteristic p (p-th powers differentiate to 0).
    pub fn derivative(&self, var: usize) -> Polynomial {
        let f = self.field();
        let mut terms = Vec::new();
        for t in &self.terms {
            let e = t.m.exp(var);
            if e == 0 {
                continue;
            }
            let c = f.mul(t.c, f.reduce_u64(e as u64));
            if c == 0 {
                continue;
            }
            let m = Monomial::var(var).quotient_of(&t.m);
            terms.push(Term { m, c });
        }
        // Dividing by one variable can reorder terms under lex-like orders
        // only in degenerate cases; canonicalize to be safe.
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Evaluate at a point of `GF(p)^n`.
    pub fn eval(&self, point: &[u32]) -> u32 {
        let f = self.field();
        let n = self.ring.nvars();
        let mut acc = 0u32;
        for t in &self.terms {
            let mut v = t.c;
            for (i, &x) in point.iter().enumerate().take(n) {
                let e = t.m.exp(i);
                if e > 0 {
                    v = f.mul(v, f.pow(x, e as u64));
                }
            }
            acc = f.add(acc, v);
        }
        acc
    }

    /// Coefficient of a monomial.
    pub fn coeff(&self, m: &Monomial) -> u32 {
        let order = self.ring.term_order();
        match self.terms.binary_search_by(|t| order.cmp(m, &t.m)) {
            Ok(i) => self.terms[i].c,
            Err(_) => 0,
        }
    }

    pub fn coeff_element(&self, m: &Monomial) -> FieldElement {
        self.field().elem(self.coeff(m) as i64)
    }

    /// Move into another ring with the same variables (re-sorting for its order).
    pub fn to_ring(&self, ring: &Ring) -> Polynomial {
        assert_eq!(ring.nvars(), self.ring.nvars());
        let f = ring.field();
        let terms = self.terms.iter().map(|t| Term { m: t.m, c: t.c % f.p() }).collect();
        Polynomial::from_terms(ring, terms)
    }

    /// Map monomials through `g` into `ring` and canonicalize.
    pub fn map_monomials(&self, ring: &Ring, g: impl Fn(&Monomial) -> Monomial) -> Polynomial {
        let terms = self.terms.iter().map(|t| Term { m: g(&t.m), c: t.c }).collect();
        Polynomial::from_terms(ring, terms)
    }

    /// Exact quotient `self / g`, or `None` if `g` does not divide `self`.
    pub fn div_exact(&self, g: &Polynomial) -> Option<Polynomial> {
        let f = self.field();
        let lead = *g.lead()?;
        let inv = f.inv(lead.c).ok()?;
        let order = self.ring.term_order();
        let mut rest = self.terms.clone();
        let mut quot: Vec<Term> = Vec::new();
        while let Some(t) = rest.first().copied() {
            if !lead.m.divides(&t.m) {
                return None;
            }
            let q = Term { m: lead.m.quotient_of(&t.m), c: f.mul(t.c, inv) };
            let prod: Vec<Term> = g.terms.iter().map(|u| Term { m: u.m.mul(&q.m), c: f.mul(u.c, q.c) }).collect();
            rest = merge_add(f, &order, &rest, &prod, f.neg(1 % f.p()));
            quot.push(q);
        }
        Some(Polynomial::from_terms(&self.ring, quot))
    }

    /// Largest `k` with `x_var^k` dividing every term, and the quotient.
    pub fn strip_variable(&self, var: usize) -> (u32, Polynomial) {
        let k = self.terms.iter().map(|t| t.m.exp(var)).min().unwrap_or(0);
        if k == 0 {
            return (0, self.clone());
        }
        let mut e = vec![0u32; self.ring.nvars()];
        e[var] = k;
        let d = Monomial::from_exponents(&e);
        let terms = self.terms.iter().map(|t| Term { m: d.quotient_of(&t.m).with_pos(t.m.pos()), c: t.c }).collect();
        (k, Polynomial { ring: self.ring.clone(), terms })
    }

    /// Coefficient vector on a list of monomials (zero where absent).
    pub fn coefficients_on(&self, monos: &[Monomial]) -> Vec<u32> {
        let map: std::collections::HashMap<Monomial, u32> = self.terms.iter().map(|t| (t.m, t.c)).collect();
        monos.iter().map(|m| map.get(m).copied().unwrap_or(0)).collect()
    }

    /// Polynomial with the given coefficients on `monos`.
    pub fn from_coefficients(ring: &Ring, monos: &[Monomial], coeffs: &[u32]) -> Polynomial {
        let terms = monos.iter().zip(coeffs).filter(|(_, &c)| c != 0).map(|(m, &c)| Term { m: *m, c }).collect();
        Polynomial::from_terms(ring, terms)
    }

    /// Check the canonical-form invariant.
    pub fn is_canonical(&self) -> bool {
        let order = self.ring.term_order();
        let p = self.field().p();
        self.terms.iter().all(|t| t.c != 0 && t.c < p)
            && self.terms.windows(2).all(|w| order.cmp(&w[0].m, &w[1].m) == Ordering::Greater)
    }

    /// Homogeneous component of grading degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        let w = self.ring.grading();
        let terms = self.terms.iter().copied().filter(|t| t.m.weighted_degree(w) == d).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }
}

/// Binary operation selector for [`poly_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(f: &Polynomial, g: &Polynomial, op: PolyOp) -> Result<Polynomial, PolyError> {
    match op {
        PolyOp::Add => f.try_add(g),
        PolyOp::Sub => f.try_sub(g),
        PolyOp::Mul => f.try_mul(g),
    }
}
