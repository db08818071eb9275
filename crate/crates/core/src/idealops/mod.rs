//! Homogeneous ideals and the operations built on Groebner bases:
//! sums and products, intersection, colon, saturation, elimination,
//! graded pieces, images of maps, singular loci and component extraction.

mod components;
mod image;
mod points;
pub(crate) mod singular;

use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::groebner::{buchberger, minimal_generators, GroebnerBasis, GroebnerError};
use crate::mpoly::{
    monomials_of_degree, same_ring, Monomial, MonomialOrder, PolyError, PolyRing, Polynomial, Ring, RingMap, Term,
};

pub use image::{image_invariants, map_degree, map_kernel, map_kernel_into, relations_in_degree, ImageInvariants};
pub use points::{
    graded_piece_points, point_ideal, points_on_curve, rnc_through_seven, PointConfiguration, RationalNormalCurve,
};
pub use components::{component_through_point, curve_components, formal_arc};
pub use singular::{singular_locus, singular_locus_gens};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error("ideals live in different rings")]
    RingMismatch,
    #[error("every form of the map vanishes on the variety")]
    AllFormsVanish,
    #[error("projection was not generic for seed {0}")]
    ProjectionNotGeneric(u64),
    #[error("point does not lie on the variety")]
    PointNotOnVariety,
    #[error("no rational point found after {0} attempts")]
    NoRationalPoint(usize),
    #[error("points are in degenerate position (coincident or dependent)")]
    DegeneratePosition,
    #[error("point is singular on the variety")]
    SingularPoint,
    #[error("component did not stabilise up to degree {0}")]
    ComponentUnstable(u32),
    #[error("generator is not homogeneous")]
    Inhomogeneous,
    #[error("saturation could not be certified")]
    SaturationUncertified,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

/// A homogeneous ideal with a lazily computed reduced Groebner basis.
#[derive(Debug)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(g) = self.gb.get() {
            let _ = gb.set(g.clone());
        }
        Ideal { ring: self.ring.clone(), gens: self.gens.clone(), gb }
    }
}

impl Ideal {
    /// The ideal generated by `gens` (zero generators are dropped).
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Ideal, IdealError> {
        if gens.iter().any(|g| !same_ring(g.ring(), ring)) {
            return Err(IdealError::RingMismatch);
        }
        if gens.iter().any(|g| !g.is_homogeneous()) {
            return Err(IdealError::Inhomogeneous);
        }
        let mut gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        dedup_polys(&mut gens);
        Ok(Ideal { ring: ring.clone(), gens, gb: OnceLock::new() })
    }

    pub(crate) fn from_parts(ring: &Ring, gens: Vec<Polynomial>, gb: Option<GroebnerBasis>) -> Ideal {
        let cell = OnceLock::new();
        if let Some(g) = gb {
            let _ = cell.set(g);
        }
        Ideal { ring: ring.clone(), gens, gb: cell }
    }

    /// Generated by a reduced Groebner basis (which becomes the cache).
    pub fn from_gb(gb: GroebnerBasis) -> Ideal {
        let ring = gb.ring().clone();
        Ideal::from_parts(&ring, gb.elements(), Some(gb))
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal::from_parts(ring, Vec::new(), None)
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::from_parts(ring, vec![Polynomial::one(ring)], None)
    }

    /// The irrelevant ideal `(x_0, .., x_{n-1})`.
    pub fn irrelevant(ring: &Ring) -> Ideal {
        let gens = (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect();
        Ideal::from_parts(ring, gens, None)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    /// The reduced Groebner basis, computed on first use.
    pub fn gb(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| buchberger(&self.ring, &self.gens).expect("generators share the ring"))
    }

    pub fn has_gb(&self) -> bool {
        self.gb.get().is_some()
    }

    pub fn is_unit(&self) -> bool {
        self.gb().is_unit()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.gb().contains(f)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.gb().normal_form(f)
    }

    /// Maximal generator degree.
    pub fn max_degree(&self) -> u32 {
        self.gens.iter().filter_map(|g| g.degree()).max().unwrap_or(0)
    }

    /// The same ideal with a minimal generating set.
    pub fn minimalize(&self) -> Ideal {
        if self.gens.is_empty() {
            return self.clone();
        }
        let gens = minimal_generators(&self.ring, &self.gens).expect("homogeneous generators");
        Ideal::from_parts(&self.ring, gens, self.gb.get().cloned())
    }

    /// Basis of the degree-`d` piece: `u - NF(u)` for each non-standard
    /// monomial `u` of degree `d`.
    pub fn graded_piece(&self, d: u32) -> GradedPieceBasis {
        let gb = self.gb();
        let leads = gb.lead_monomials();
        let nonstandard: Vec<Monomial> = monomials_of_degree(self.ring.nvars(), d)
            .into_iter()
            .filter(|u| leads.iter().any(|l| l.divides(u)))
            .collect();
        let polys: Vec<Polynomial> =
            nonstandard.iter().map(|u| Polynomial::monomial(&self.ring, *u, 1)).collect();
        let nfs = gb.normal_forms(&polys);
        let basis = polys.iter().zip(nfs).map(|(u, r)| u.sub(&r)).collect();
        GradedPieceBasis { degree: d, basis }
    }

    /// `dim_k (R/I)_d` by counting standard monomials.
    pub fn hilbert_function(&self, d: u32) -> usize {
        let leads = self.gb().lead_monomials();
        monomials_of_degree(self.ring.nvars(), d).into_iter().filter(|u| !leads.iter().any(|l| l.divides(u))).count()
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &Ideal) -> Result<bool, IdealError> {
        is_subset(self, other)
    }

    /// Apply a ring map to the generators.
    pub fn map(&self, f: &RingMap) -> Result<Ideal, IdealError> {
        let gens = self.gens.iter().map(|g| f.apply(g)).collect::<Result<Vec<_>, _>>()?;
        Ideal::new(f.target(), gens)
    }

    /// Move to another ring with the same variables (e.g. a new order).
    pub fn to_ring(&self, ring: &Ring) -> Ideal {
        Ideal::from_parts(ring, self.gens.iter().map(|g| g.to_ring(ring)).collect(), None)
    }
}

fn dedup_polys(gens: &mut Vec<Polynomial>) {
    let mut seen: Vec<Polynomial> = Vec::with_capacity(gens.len());
    for g in gens.drain(..) {
        let m = g.monic();
        if !seen.iter().any(|h| h.monic() == m) {
            seen.push(g);
        }
    }
    *gens = seen;
}

/// Homogeneous basis of a graded piece.
#[derive(Clone, Debug)]
pub struct GradedPieceBasis {
    pub degree: u32,
    pub basis: Vec<Polynomial>,
}

impl GradedPieceBasis {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

/// How [`combine`] joins two ideals.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Combine {
    Sum,
    Product,
    /// `I^k`; the second argument is ignored.
    Power(u32),
}

fn check(i: &Ideal, j: &Ideal) -> Result<(), IdealError> {
    if same_ring(&i.ring, &j.ring) {
        Ok(())
    } else {
        Err(IdealError::RingMismatch)
    }
}

pub fn combine(i: &Ideal, j: &Ideal, op: Combine) -> Result<Ideal, IdealError> {
    check(i, j)?;
    let gens = match op {
        Combine::Sum => i.gens.iter().chain(&j.gens).cloned().collect(),
        Combine::Product => i.gens.iter().flat_map(|a| j.gens.iter().map(move |b| a.mul(b))).collect(),
        Combine::Power(k) => return Ok(power(i, k)),
    };
    Ideal::new(&i.ring, gens)
}

pub fn sum(i: &Ideal, j: &Ideal) -> Result<Ideal, IdealError> {
    combine(i, j, Combine::Sum)
}

pub fn product(i: &Ideal, j: &Ideal) -> Result<Ideal, IdealError> {
    combine(i, j, Combine::Product)
}

/// `I^k`, generated by the degree-`k` monomials in the (minimal) generators.
pub fn power(i: &Ideal, k: u32) -> Ideal {
    if k == 0 {
        return Ideal::unit(&i.ring);
    }
    let base = if i.gens.len() > 1 { i.minimalize().gens } else { i.gens.clone() };
    let mut out = Ideal::from_parts(&i.ring, multiset_products(&base, k), None);
    dedup_polys(&mut out.gens);
    out
}

fn multiset_products(base: &[Polynomial], k: u32) -> Vec<Polynomial> {
    let mut out = Vec::new();
    fn rec(base: &[Polynomial], start: usize, left: u32, acc: Polynomial, out: &mut Vec<Polynomial>) {
        if left == 0 {
            out.push(acc);
            return;
        }
        for a in start..base.len() {
            rec(base, a, left - 1, acc.mul(&base[a]), out);
        }
    }
    if let Some(first) = base.first() {
        rec(base, 0, k, Polynomial::one(first.ring()), &mut out);
    }
    out
}

pub fn is_subset(i: &Ideal, j: &Ideal) -> Result<bool, IdealError> {
    check(i, j)?;
    Ok(j.gb().contains_all(&i.gens))
}

pub fn equals(i: &Ideal, j: &Ideal) -> Result<bool, IdealError> {
    Ok(is_subset(i, j)? && is_subset(j, i)?)
}

/// A ring whose variables are `extra` fresh ones (weight 0 if
/// `weightless`) followed by the variables of `ring`, with an elimination
/// order on the fresh block.
fn extended_ring(ring: &Ring, extra: &[&str], weights: Vec<u32>) -> Result<Ring, IdealError> {
    let mut names: Vec<String> = extra.iter().map(|s| s.to_string()).collect();
    let mut used: Vec<String> = ring.names().to_vec();
    for nm in names.iter_mut() {
        while used.contains(nm) {
            nm.push('_');
        }
        used.push(nm.clone());
    }
    names.extend(ring.names().iter().cloned());
    let mut grading = weights;
    grading.extend(ring.grading().iter().copied());
    Ok(PolyRing::build(ring.field(), names, MonomialOrder::elim(extra.len()), grading)?)
}

fn shift_up(f: &Polynomial, target: &Ring, k: usize) -> Polynomial {
    f.map_monomials(target, |m| m.insert_lanes(0, k))
}

fn shift_down(f: &Polynomial, target: &Ring, k: usize) -> Polynomial {
    f.map_monomials(target, |m| m.remove_lanes(0, k))
}

/// Elements of a GB over an extended ring that avoid the first `k`
/// variables, moved down to `ring`.
fn eliminated_part(gb: &GroebnerBasis, ring: &Ring, k: usize) -> Vec<Polynomial> {
    let mask_free = |m: &Monomial| (0..k).all(|v| m.exp(v) == 0);
    gb.elements()
        .into_iter()
        .filter(|g| g.terms().iter().all(|t| mask_free(&t.m)))
        .map(|g| shift_down(&g, ring, k))
        .collect()
}

/// `I ∩ J`, by eliminating `t` from `t I + (1 - t) J` (`t` has degree 0).
pub fn intersect(i: &Ideal, j: &Ideal) -> Result<Ideal, IdealError> {
    check(i, j)?;
    if i.is_zero() || j.is_zero() {
        return Ok(Ideal::zero(&i.ring));
    }
    if i.gens.iter().all(|g| g.is_constant()) {
        return Ok(j.clone());
    }
    if j.gens.iter().all(|g| g.is_constant()) {
        return Ok(i.clone());
    }
    let ring = &i.ring;
    let tr = extended_ring(ring, &["t"], vec![0])?;
    let t = Polynomial::var(&tr, 0);
    let one_minus_t = Polynomial::one(&tr).sub(&t);
    let mut gens = Vec::with_capacity(i.gens.len() + j.gens.len());
    for g in &i.gens {
        gens.push(shift_up(g, &tr, 1).mul(&t));
    }
    for g in &j.gens {
        gens.push(shift_up(g, &tr, 1).mul(&one_minus_t));
    }
    let gb = buchberger(&tr, &gens)?;
    let elems = eliminated_part(&gb, ring, 1);
    Ok(Ideal::from_parts(ring, elems, None))
}

/// Intersection of many ideals, pairing them up in a balanced tree.
pub fn intersect_all(ideals: &[Ideal]) -> Result<Ideal, IdealError> {
    assert!(!ideals.is_empty(), "intersect_all of an empty list");
    let mut cur: Vec<Ideal> = ideals.to_vec();
    while cur.len() > 1 {
        let mut next = Vec::with_capacity(cur.len().div_ceil(2));
        let mut it = cur.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(intersect(&a, &b)?),
                None => next.push(a),
            }
        }
        cur = next;
    }
    Ok(cur.pop().unwrap())
}

/// `I : (g)` as `(I ∩ (g)) / g`.
pub fn quotient_by(i: &Ideal, g: &Polynomial) -> Result<Ideal, IdealError> {
    if !same_ring(g.ring(), &i.ring) {
        return Err(IdealError::RingMismatch);
    }
    if g.is_zero() || i.contains(g) {
        return Ok(Ideal::unit(&i.ring));
    }
    let principal = Ideal::new(&i.ring, vec![g.clone()])?;
    let both = intersect(i, &principal)?;
    let gens = both.gb().elements().iter().map(|f| f.div_exact(g).expect("element of (g)")).collect();
    Ideal::new(&i.ring, gens)
}

/// `I : J = ∩_g (I : g)` over the generators of `J`.
pub fn quotient(i: &Ideal, j: &Ideal) -> Result<Ideal, IdealError> {
    check(i, j)?;
    let mut parts = Vec::new();
    for g in &j.gens {
        if !i.contains(g) {
            parts.push(quotient_by(i, g)?);
        }
    }
    if parts.is_empty() {
        return Ok(Ideal::unit(&i.ring));
    }
    intersect_all(&parts)
}

/// `I : J^∞` by repeated colon until the ideal stops growing.
pub fn saturate_by_quotients(i: &Ideal, j: &Ideal) -> Result<Ideal, IdealError> {
    check(i, j)?;
    let mut cur = i.clone();
    loop {
        let next = quotient(&cur, j)?;
        if is_subset(&next, &cur)? {
            return Ok(cur);
        }
        cur = next;
    }
}

const SATURATION_SEEDS: u64 = 4;
const MAX_CERT_POWER: u32 = 64;

/// `I : J^∞` (`J` defaults to the irrelevant ideal in [`saturate`]).
///
/// For `J` generated by linear forms this uses a generic linear form `l`
/// of `J`: after a change of coordinates making `l` the last variable, the
/// grevlex basis of `I` divided by powers of that variable is a basis of
/// `I : l^∞`. Otherwise the colon by a generic element of `J` is iterated.
/// Either way the candidate `S ⊇ I : J^∞` is certified by checking
/// `g^k s ∈ I` for every generator `s` of `S` and `g` of `J`.
pub fn saturate_wrt(i: &Ideal, j: &Ideal) -> Result<Ideal, IdealError> {
    check(i, j)?;
    if i.is_zero() || i.is_unit() || j.is_unit() {
        return Ok(i.clone());
    }
    if j.is_zero() {
        return Ok(Ideal::unit(&i.ring));
    }
    let jgens: Vec<Polynomial> = j.gens.iter().filter(|g| !i.contains(g)).cloned().collect();
    if jgens.is_empty() {
        return Ok(Ideal::unit(&i.ring));
    }
    let linear = i.ring.is_standard_graded() && j.gens.iter().all(|g| g.degree() == Some(1));
    for seed in 0..SATURATION_SEEDS {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5a7 ^ (seed * 0x9e37_79b9));
        let cand = if linear {
            let l = random_combination(&j.gens, &mut rng);
            if l.is_zero() {
                continue;
            }
            saturate_linear(i, &l)?
        } else {
            let h = random_element(&j.gens, &mut rng);
            if h.is_zero() {
                continue;
            }
            let mut cur = i.clone();
            loop {
                let next = quotient_by(&cur, &h)?;
                if is_subset(&next, &cur)? {
                    break cur;
                }
                cur = next;
            }
        };
        if certify_saturation(i, &cand, &j.gens) {
            return Ok(cand);
        }
    }
    Err(IdealError::SaturationUncertified)
}

/// `I : m^∞` for the irrelevant ideal `m`.
pub fn saturate(i: &Ideal) -> Result<Ideal, IdealError> {
    saturate_wrt(i, &Ideal::irrelevant(&i.ring))
}

fn random_combination(gens: &[Polynomial], rng: &mut ChaCha8Rng) -> Polynomial {
    let ring = gens[0].ring();
    let p = ring.field().p();
    let mut acc = Polynomial::zero(ring);
    for g in gens {
        acc = acc.add_scaled(g, rng.gen_range(1..p));
    }
    acc
}

/// A random element of the ideal generated by `gens`, homogeneous of the
/// maximal generator degree.
fn random_element(gens: &[Polynomial], rng: &mut ChaCha8Rng) -> Polynomial {
    let ring = gens[0].ring();
    let p = ring.field().p();
    let top = gens.iter().filter_map(|g| g.degree()).max().unwrap_or(0);
    let mut acc = Polynomial::zero(ring);
    for g in gens {
        let gap = top - g.degree().unwrap_or(top);
        let mut f = g.clone();
        for _ in 0..gap {
            let l: Vec<Term> = (0..ring.nvars()).map(|v| Term { m: Monomial::var(v), c: rng.gen_range(1..p) }).collect();
            f = f.mul(&Polynomial::from_terms(ring, l));
        }
        acc = acc.add_scaled(&f, rng.gen_range(1..p));
    }
    acc
}

/// `I : l^∞` for a linear form `l` (the Bayer trick).
fn saturate_linear(i: &Ideal, l: &Polynomial) -> Result<Ideal, IdealError> {
    let ring = &i.ring;
    let n = ring.nvars();
    let f = ring.field();
    // Pivot: the last variable with a nonzero coefficient in l.
    let v = (0..n).rev().find(|&k| l.coeff(&Monomial::var(k)) != 0).expect("nonzero linear form");
    let cv = l.coeff(&Monomial::var(v));
    let inv = f.inv(cv).expect("nonzero");
    // New ring: the same variables with y_v moved to the end.
    let idx = |k: usize| if k < v { k } else if k == v { n - 1 } else { k - 1 };
    let mut names: Vec<String> = (0..n).filter(|&k| k != v).map(|k| ring.names()[k].clone()).collect();
    names.push(ring.names()[v].clone());
    let s = PolyRing::with_names(f, names, MonomialOrder::Grevlex)?;
    // Forward: x_k -> y_k (k != v), x_v -> (y_v - sum c_k y_k)/c_v.
    let mut fwd = Vec::with_capacity(n);
    for k in 0..n {
        if k == v {
            let mut terms = vec![Term { m: Monomial::var(n - 1), c: inv }];
            for t in l.terms() {
                let kk = (0..n).find(|&q| t.m.exp(q) == 1).unwrap();
                if kk != v {
                    terms.push(Term { m: Monomial::var(idx(kk)), c: f.neg(f.mul(t.c, inv)) });
                }
            }
            fwd.push(Polynomial::from_terms(&s, terms));
        } else {
            fwd.push(Polynomial::var(&s, idx(k)));
        }
    }
    let fwd = RingMap::new(ring, &s, fwd)?;
    // Backward: y_k -> x_k, y_v -> l(x).
    let mut back = vec![Polynomial::zero(ring); n];
    for k in 0..n {
        back[idx(k)] = if k == v { l.clone() } else { Polynomial::var(ring, k) };
    }
    let back = RingMap::new(&s, ring, back)?;
    let moved = i.gens.iter().map(|g| fwd.apply(g)).collect::<Result<Vec<_>, _>>()?;
    let gb = buchberger(&s, &moved)?;
    let stripped: Vec<Polynomial> = gb.elements().iter().map(|g| g.strip_variable(n - 1).1).collect();
    let gens = stripped.iter().map(|g| back.apply(g)).collect::<Result<Vec<_>, _>>()?;
    Ideal::new(ring, gens)
}

/// Check that every generator `s` of `cand` has `g^k s ∈ I` for each `g`.
fn certify_saturation(i: &Ideal, cand: &Ideal, jgens: &[Polynomial]) -> bool {
    let gb = i.gb();
    let open: Vec<Polynomial> = gb.normal_forms(&cand.gens).into_iter().filter(|r| !r.is_zero()).collect();
    if open.is_empty() {
        return true;
    }
    for g in jgens {
        let mut cur = open.clone();
        let mut k = 0;
        while !cur.is_empty() {
            k += 1;
            if k > MAX_CERT_POWER {
                return false;
            }
            let prods: Vec<Polynomial> = cur.iter().map(|r| r.mul(g)).collect();
            cur = gb.normal_forms(&prods).into_iter().filter(|r| !r.is_zero()).collect();
        }
    }
    true
}

/// `I ∩ k[vars not in elim]`, returned in a ring over the kept variables
/// (in their original order, grevlex).
pub fn eliminate(i: &Ideal, elim: &[usize]) -> Result<Ideal, IdealError> {
    let ring = &i.ring;
    let n = ring.nvars();
    let keep: Vec<usize> = (0..n).filter(|k| !elim.contains(k)).collect();
    let sub_names: Vec<String> = keep.iter().map(|&k| ring.names()[k].clone()).collect();
    let sub_grading: Vec<u32> = keep.iter().map(|&k| ring.grading()[k]).collect();
    let sub = PolyRing::build(ring.field(), sub_names, MonomialOrder::Grevlex, sub_grading)?;
    if i.is_unit() {
        return Ok(Ideal::unit(&sub));
    }
    let perm: Vec<usize> = elim.iter().copied().chain(keep.iter().copied()).collect();
    let names: Vec<String> = perm.iter().map(|&k| ring.names()[k].clone()).collect();
    let grading: Vec<u32> = perm.iter().map(|&k| ring.grading()[k]).collect();
    let er = PolyRing::build(ring.field(), names, MonomialOrder::elim(elim.len()), grading)?;
    let images: Vec<Polynomial> =
        (0..n).map(|k| Polynomial::var(&er, perm.iter().position(|&q| q == k).unwrap())).collect();
    let to_er = RingMap::new(ring, &er, images)?;
    let gens = i.gens.iter().map(|g| to_er.apply(g)).collect::<Result<Vec<_>, _>>()?;
    let gb = buchberger(&er, &gens)?;
    let elems = eliminated_part(&gb, &sub, elim.len());
    Ideal::new(&sub, elems)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::PrimeField;
    use crate::mpoly::parse_polynomial;

    fn ring(n: usize) -> Ring {
        PolyRing::new(PrimeField::new(67).unwrap(), n, MonomialOrder::Grevlex).unwrap()
    }

    fn ideal(r: &Ring, s: &[&str]) -> Ideal {
        Ideal::new(r, s.iter().map(|x| parse_polynomial(r, x).unwrap()).collect()).unwrap()
    }

    #[test]
    fn intersect_and_quotient_basics() {
        let r = ring(3);
        let a = ideal(&r, &["x0"]);
        let b = ideal(&r, &["x1"]);
        let c = intersect(&a, &b).unwrap();
        assert!(equals(&c, &ideal(&r, &["x0*x1"])).unwrap());
        let q = quotient(&ideal(&r, &["x0*x1"]), &a).unwrap();
        assert!(equals(&q, &b).unwrap());
        let same = intersect(&c, &c).unwrap();
        assert!(equals(&same, &c).unwrap());
    }

    #[test]
    fn square_of_pair() {
        let r = ring(3);
        let sq = power(&ideal(&r, &["x0", "x1"]), 2);
        assert!(equals(&sq, &ideal(&r, &["x0^2", "x0*x1", "x1^2"])).unwrap());
    }

    #[test]
    fn saturation_removes_embedded_point() {
        let r = ring(3);
        let m3 = power(&Ideal::irrelevant(&r), 3);
        assert!(saturate(&m3).unwrap().is_unit());
        // (x0) ∩ (x0, x1, x2)^2 saturates to (x0).
        let i = intersect(&ideal(&r, &["x0"]), &power(&Ideal::irrelevant(&r), 2)).unwrap();
        let s = saturate(&i).unwrap();
        assert!(equals(&s, &ideal(&r, &["x0"])).unwrap());
        let t = saturate_by_quotients(&i, &Ideal::irrelevant(&r)).unwrap();
        assert!(equals(&s, &t).unwrap());
    }

    #[test]
    fn eliminate_witness() {
        let r = ring(2);
        let tr = extended_ring(&r, &["t"], vec![1]).unwrap();
        let i = Ideal::new(
            &tr,
            vec![parse_polynomial(&tr, "t*x0").unwrap(), parse_polynomial(&tr, "x1 - t").unwrap()],
        )
        .unwrap();
        let e = eliminate(&i, &[0]).unwrap();
        assert_eq!(e.gb().elements().len(), 1);
        assert_eq!(e.gb().elements()[0].to_string(), "x0*x1");
    }

    #[test]
    fn graded_piece_of_ideal() {
        let r = ring(3);
        let i = ideal(&r, &["x0*x1", "x2^2"]);
        assert_eq!(i.graded_piece(2).dimension(), 2);
        assert_eq!(i.graded_piece(3).dimension(), 10 - i.hilbert_function(3));
    }
}
