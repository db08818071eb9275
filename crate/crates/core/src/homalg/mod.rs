//! Finitely presented graded modules over a polynomial ring `S`: conormal
//! modules, tensor products, duals, Ext, and global sections of the
//! associated sheaves.
//!
//! A module is always a cokernel `F_0 / <relations>` of a map of graded
//! free `S`-modules; modules over `S/I` carry the relations `I F_0`.

use std::sync::Arc;

use rustc_hash::FxHashMap as HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::groebner::{
    free_resolution, minimal_module_generators, module_buchberger, syzygies, FreeModule, GroebnerError,
    ModuleElement, ModuleGb, Resolution,
};
use crate::idealops::{Ideal, IdealError};
use crate::linalg::DenseMatrix;
use crate::mpoly::{monomials_of_degree, same_ring, Monomial, PolyMatrix, Polynomial, Ring, Term};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomalgError {
    #[error("modules over different rings")]
    RingMismatch,
    #[error("no unique splitting type satisfies the constraints ({0} candidates)")]
    InconsistentConstraints(usize),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// A graded module given by generators (a free module) and relations.
#[derive(Clone, Debug)]
pub struct GradedModule {
    gens: Arc<FreeModule>,
    relations: Vec<ModuleElement>,
}

fn rebase(e: &ModuleElement, target: &Arc<FreeModule>) -> ModuleElement {
    ModuleElement::from_terms(target, e.terms().to_vec())
}

impl GradedModule {
    pub fn new(gens: Arc<FreeModule>, relations: Vec<ModuleElement>) -> Self {
        let relations = relations.into_iter().filter(|r| !r.is_zero()).map(|r| rebase(&r, &gens)).collect();
        GradedModule { gens, relations }
    }

    /// The free module with generators in the given degrees.
    pub fn free(ring: &Ring, degrees: Vec<i32>) -> Self {
        GradedModule { gens: FreeModule::new(ring, degrees), relations: Vec::new() }
    }

    /// `S/I`.
    pub fn cyclic(i: &Ideal) -> Self {
        let f0 = FreeModule::new(i.ring(), vec![0]);
        let rels = i.gens().iter().map(|g| ModuleElement::from_components(&f0, std::slice::from_ref(g))).collect();
        GradedModule::new(f0, rels)
    }

    pub fn ring(&self) -> &Ring {
        self.gens.ring()
    }

    pub fn generators(&self) -> &Arc<FreeModule> {
        &self.gens
    }

    pub fn degrees(&self) -> &[i32] {
        self.gens.degrees()
    }

    pub fn relations(&self) -> &[ModuleElement] {
        &self.relations
    }

    pub fn presentation(&self) -> PolyMatrix {
        let ring = self.ring();
        let mut m = PolyMatrix::zeros(ring, self.gens.rank(), self.relations.len());
        for (j, r) in self.relations.iter().enumerate() {
            for (i, c) in r.components().into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        m.row_twists = self.gens.degrees().to_vec();
        m.col_twists = self.relations.iter().map(|r| r.degree().unwrap_or(0) as i32).collect();
        m
    }

    /// Groebner basis of the relation module.
    pub fn relation_gb(&self) -> Result<ModuleGb, HomalgError> {
        Ok(module_buchberger(&self.gens, &self.relations)?.0)
    }

    /// `dim_k M_d`.
    pub fn hilbert_function(&self, d: i32) -> Result<usize, HomalgError> {
        let gb = self.relation_gb()?;
        Ok(hilbert_from_gb(&self.gens, &gb, d))
    }

    /// `M(d)`, so that `M(d)_e = M_{d+e}`.
    pub fn shift(&self, d: i32) -> Self {
        let degrees = self.gens.degrees().iter().map(|a| a - d).collect();
        let gens = FreeModule::new(self.ring(), degrees);
        let relations = self.relations.iter().map(|r| rebase(r, &gens)).collect();
        GradedModule { gens, relations }
    }

    /// `M / I M`.
    pub fn quotient_by(&self, i: &Ideal) -> Result<Self, HomalgError> {
        if !same_ring(i.ring(), self.ring()) {
            return Err(HomalgError::RingMismatch);
        }
        let mut rels = self.relations.clone();
        for k in 0..self.gens.rank() {
            let e = ModuleElement::basis(&self.gens, k);
            for g in i.gens() {
                rels.push(e.mul_poly(g));
            }
        }
        Ok(GradedModule::new(self.gens.clone(), rels))
    }

    /// `M ⊗_S N`.
    pub fn tensor(&self, o: &GradedModule) -> Result<Self, HomalgError> {
        if !same_ring(self.ring(), o.ring()) {
            return Err(HomalgError::RingMismatch);
        }
        let (ra, rb) = (self.gens.rank(), o.gens.rank());
        let mut degrees = Vec::with_capacity(ra * rb);
        for a in self.gens.degrees() {
            for b in o.gens.degrees() {
                degrees.push(a + b);
            }
        }
        let gens = FreeModule::new(self.ring(), degrees);
        let mut rels = Vec::new();
        for r in &self.relations {
            for j in 0..rb {
                let terms = r.terms().iter().map(|t| Term { m: t.m.with_pos(t.m.pos() * rb as u32 + j as u32), c: t.c });
                rels.push(ModuleElement::from_terms(&gens, terms.collect()));
            }
        }
        for s in &o.relations {
            for i in 0..ra {
                let terms = s.terms().iter().map(|t| Term { m: t.m.with_pos((i * rb) as u32 + t.m.pos()), c: t.c });
                rels.push(ModuleElement::from_terms(&gens, terms.collect()));
            }
        }
        GradedModule::new(gens, rels).prune()
    }

    /// `Hom(M, S/I)` (`Hom(M, S)` when `over` is `None`).
    pub fn dual(&self, over: Option<&Ideal>) -> Result<Self, HomalgError> {
        let ring = self.ring().clone();
        let r0 = self.gens.rank();
        let dual0 = FreeModule::new(&ring, self.gens.degrees().iter().map(|a| -a).collect());
        let rel_degrees: Vec<i32> = self.relations.iter().map(|r| r.degree().unwrap() as i32).collect();
        let dual1 = FreeModule::new(&ring, rel_degrees.iter().map(|b| -b).collect());
        let comps: Vec<Vec<Polynomial>> = self.relations.iter().map(|r| r.components()).collect();
        // Column i of the transposed presentation, as an element of dual1.
        let mut cols: Vec<(usize, ModuleElement)> = Vec::new();
        let mut kernel: Vec<ModuleElement> = Vec::new();
        for i in 0..r0 {
            let col: Vec<Polynomial> = comps.iter().map(|c| c[i].clone()).collect();
            let e = ModuleElement::from_components(&dual1, &col);
            if e.is_zero() {
                kernel.push(ModuleElement::basis(&dual0, i));
            } else {
                cols.push((i, e));
            }
        }
        let ideal_gens: Vec<Polynomial> = over.map(|i| i.gens().to_vec()).unwrap_or_default();
        let mut all: Vec<ModuleElement> = cols.iter().map(|(_, e)| e.clone()).collect();
        for j in 0..dual1.rank() {
            let e = ModuleElement::basis(&dual1, j);
            for g in &ideal_gens {
                all.push(e.mul_poly(g));
            }
        }
        if !cols.is_empty() {
            let k = cols.len();
            let syz = syzygies(&dual1, &all)?;
            for s in syz {
                let c = s.components();
                let mut v = vec![Polynomial::zero(&ring); r0];
                for (slot, (i, _)) in cols.iter().enumerate().take(k) {
                    v[*i] = c[slot].clone();
                }
                let e = ModuleElement::from_components(&dual0, &v);
                if !e.is_zero() {
                    kernel.push(e);
                }
            }
        }
        let mut sub = Vec::new();
        for i in 0..r0 {
            let e = ModuleElement::basis(&dual0, i);
            for g in &ideal_gens {
                sub.push(e.mul_poly(g));
            }
        }
        subquotient(&dual0, &kernel, &sub)
    }

    /// Drop generators killed by a relation with a unit entry and reduce
    /// the relations to a minimal generating set.
    pub fn prune(&self) -> Result<Self, HomalgError> {
        let ring = self.ring().clone();
        let f = ring.field();
        let mut degrees = self.gens.degrees().to_vec();
        let mut rels: Vec<Vec<Polynomial>> = self.relations.iter().map(|r| r.components()).collect();
        loop {
            let hit = rels.iter().enumerate().find_map(|(j, r)| {
                r.iter().position(|c| c.is_constant() && !c.is_zero()).map(|i| (j, i))
            });
            let Some((j, i)) = hit else { break };
            let pivot = rels.swap_remove(j);
            let inv = f.inv(pivot[i].as_constant().unwrap()).unwrap();
            // e_i = -inv * sum_{k != i} pivot_k e_k
            for r in rels.iter_mut() {
                let c = r[i].clone();
                if c.is_zero() {
                    continue;
                }
                let scale = c.scale(f.neg(inv));
                for k in 0..r.len() {
                    if k != i {
                        r[k] = r[k].add(&pivot[k].mul(&scale));
                    }
                }
                r[i] = Polynomial::zero(&ring);
            }
            for r in rels.iter_mut() {
                r.remove(i);
            }
            degrees.remove(i);
        }
        let gens = FreeModule::new(&ring, degrees);
        let elems: Vec<ModuleElement> = rels
            .iter()
            .map(|r| ModuleElement::from_components(&gens, r))
            .filter(|e| !e.is_zero())
            .collect();
        let minimal = minimal_module_generators(&gens, &elems)?;
        Ok(GradedModule { gens, relations: minimal })
    }

    /// A free resolution of length at most `nvars + 1`.
    pub fn resolution(&self) -> Result<Resolution, HomalgError> {
        Ok(free_resolution(&self.gens, &self.relations, self.ring().nvars() + 1)?)
    }
}

/// Number of standard monomials of degree `d` for a module GB.
fn hilbert_from_gb(f: &FreeModule, gb: &ModuleGb, d: i32) -> usize {
    let n = f.ring().nvars();
    let leads = gb.lead_monomials();
    let mut count = 0;
    for (i, &a) in f.degrees().iter().enumerate() {
        let k = d - a;
        if k < 0 {
            continue;
        }
        let here: Vec<Monomial> = leads.iter().filter(|m| m.pos() == i as u32).map(|m| m.with_pos(0)).collect();
        count += monomials_of_degree(n, k as u32).into_iter().filter(|u| !here.iter().any(|l| l.divides(u))).count();
    }
    count
}

/// The module `(<g> + <n>) / <n>` for elements of a free module `f`.
pub fn subquotient(f: &Arc<FreeModule>, g: &[ModuleElement], n: &[ModuleElement]) -> Result<GradedModule, HomalgError> {
    let g: Vec<ModuleElement> = g.iter().filter(|e| !e.is_zero()).cloned().collect();
    let ring = f.ring().clone();
    if g.is_empty() {
        return Ok(GradedModule::free(&ring, Vec::new()));
    }
    let k = g.len();
    let degrees: Vec<i32> = g.iter().map(|e| e.degree().unwrap() as i32).collect();
    let gens = FreeModule::new(&ring, degrees);
    let mut all = g.clone();
    all.extend(n.iter().filter(|e| !e.is_zero()).cloned());
    let syz = syzygies(f, &all)?;
    let rels: Vec<ModuleElement> = syz
        .into_iter()
        .map(|s| ModuleElement::from_components(&gens, &s.components()[..k]))
        .filter(|e| !e.is_zero())
        .collect();
    GradedModule::new(gens, rels).prune()
}

/// The conormal module `I / I^2`: generators the minimal generators of
/// `I`, relations their syzygies together with `I` times every generator.
pub fn conormal(i: &Ideal) -> Result<GradedModule, HomalgError> {
    let ring = i.ring();
    let mins = i.minimalize().gens().to_vec();
    let f0 = FreeModule::new(ring, vec![0]);
    let elems: Vec<ModuleElement> =
        mins.iter().map(|g| ModuleElement::from_components(&f0, std::slice::from_ref(g))).collect();
    let gens = FreeModule::new(ring, mins.iter().map(|g| g.degree().unwrap() as i32).collect());
    let mut rels: Vec<ModuleElement> = syzygies(&f0, &elems)?.iter().map(|s| rebase(s, &gens)).collect();
    for k in 0..mins.len() {
        let e = ModuleElement::basis(&gens, k);
        for g in &mins {
            rels.push(e.mul_poly(g));
        }
    }
    GradedModule::new(gens, rels).prune()
}

/// `Ext^i_S(M, S(twist))`, as the cohomology of the dual of a free
/// resolution.
pub fn ext_module(m: &GradedModule, i: usize, twist: i32) -> Result<GradedModule, HomalgError> {
    let ring = m.ring().clone();
    let res = m.resolution()?;
    if i >= res.modules.len() {
        return Ok(GradedModule::free(&ring, Vec::new()));
    }
    let dual_of = |k: usize| FreeModule::new(&ring, res.modules[k].degrees().iter().map(|b| -b).collect());
    let fi = dual_of(i);
    // Kernel of d_{i+1}^T : F_i^* -> F_{i+1}^*.
    let mut kernel: Vec<ModuleElement> = Vec::new();
    if i < res.maps.len() {
        let d = &res.maps[i];
        let fnext = dual_of(i + 1);
        let mut cols: Vec<(usize, ModuleElement)> = Vec::new();
        for j in 0..d.nrows() {
            let e = ModuleElement::from_components(&fnext, d.row_entries(j));
            if e.is_zero() {
                kernel.push(ModuleElement::basis(&fi, j));
            } else {
                cols.push((j, e));
            }
        }
        if !cols.is_empty() {
            let elems: Vec<ModuleElement> = cols.iter().map(|(_, e)| e.clone()).collect();
            for s in syzygies(&fnext, &elems)? {
                let c = s.components();
                let mut v = vec![Polynomial::zero(&ring); fi.rank()];
                for (slot, (j, _)) in cols.iter().enumerate() {
                    v[*j] = c[slot].clone();
                }
                kernel.push(ModuleElement::from_components(&fi, &v));
            }
        }
    } else {
        kernel = (0..fi.rank()).map(|j| ModuleElement::basis(&fi, j)).collect();
    }
    // Image of d_i^T : F_{i-1}^* -> F_i^*.
    let mut image = Vec::new();
    if i > 0 {
        let d = &res.maps[i - 1];
        for r in 0..d.nrows() {
            image.push(ModuleElement::from_components(&fi, d.row_entries(r)));
        }
    }
    Ok(subquotient(&fi, &kernel, &image)?.shift(twist))
}

/// The matrix of `Hom(d, S)` in degree `e`, where `d: F_{i+1} -> F_i` has
/// rows indexed by `F_i`. Rows of the result are the images of a monomial
/// basis of `Hom(F_i, S)_e`.
fn dual_map_in_degree(ring: &Ring, d: &PolyMatrix, src: &[i32], tgt: &[i32], e: i32) -> DenseMatrix {
    let n = ring.nvars();
    let basis = |degs: &[i32]| -> Vec<Vec<Monomial>> {
        degs.iter().map(|b| if e + b >= 0 { monomials_of_degree(n, (e + b) as u32) } else { Vec::new() }).collect()
    };
    let tgt_basis = basis(tgt);
    let mut offset = Vec::with_capacity(tgt.len());
    let mut index: HashMap<(usize, Monomial), usize> = HashMap::default();
    let mut total = 0;
    for (k, monos) in tgt_basis.iter().enumerate() {
        offset.push(total);
        for (t, m) in monos.iter().enumerate() {
            index.insert((k, *m), total + t);
        }
        total += monos.len();
    }
    let mut rows = Vec::new();
    for (j, monos) in basis(src).iter().enumerate() {
        for u in monos {
            let mut row = vec![0u32; total];
            for k in 0..tgt.len() {
                for t in d.get(j, k).terms() {
                    row[index[&(k, t.m.mul(u))]] = t.c;
                }
            }
            rows.push(row);
        }
    }
    DenseMatrix::from_rows(ring.field(), total, rows)
}

/// `dim_k Ext^i_S(M, S)_e` for the module resolved by `res`, computed in
/// the single degree `e` of the dual complex.
pub fn ext_dimension(res: &Resolution, i: usize, e: i32) -> usize {
    let Some(fi) = res.modules.get(i) else { return 0 };
    let ring = fi.ring();
    let n = ring.nvars();
    let dim: usize = fi.degrees().iter().filter(|b| e + *b >= 0).map(|b| monomials_of_degree(n, (e + b) as u32).len()).sum();
    let mut rank = 0;
    if let Some(d) = res.maps.get(i) {
        rank += dual_map_in_degree(ring, d, fi.degrees(), res.modules[i + 1].degrees(), e).rank();
    }
    if i > 0 {
        let d = &res.maps[i - 1];
        rank += dual_map_in_degree(ring, d, res.modules[i - 1].degrees(), fi.degrees(), e).rank();
    }
    dim - rank
}

/// The local-cohomology pieces behind [`sheaf_h0`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionCount {
    pub module_dim: usize,
    pub h0_m: usize,
    pub h1_m: usize,
    pub h0: usize,
}

/// `h^0` of the sheaf associated to `M`, twisted by `d`, by local duality:
/// `dim M_d - dim H^0_m(M)_d + dim H^1_m(M)_d` with
/// `H^i_m(M)_d` dual to `Ext^{n-i}(M, S(-n))_{-d}`.
pub fn sheaf_h0_detail(m: &GradedModule, d: i32) -> Result<SectionCount, HomalgError> {
    let n = m.ring().nvars();
    let res = m.resolution()?;
    let module_dim = m.hilbert_function(d)?;
    let e = -d - n as i32;
    let h0_m = ext_dimension(&res, n, e);
    let h1_m = ext_dimension(&res, n - 1, e);
    Ok(SectionCount { module_dim, h0_m, h1_m, h0: module_dim + h1_m - h0_m })
}

pub fn sheaf_h0(m: &GradedModule, d: i32) -> Result<usize, HomalgError> {
    Ok(sheaf_h0_detail(m, d)?.h0)
}

/// `h^0(P^1, O(a_1) + .. + O(a_r))`.
pub fn h0_on_p1(twists: &[i64]) -> i64 {
    twists.iter().map(|&a| (a + 1).max(0)).sum()
}

/// `h^0(N^* ⊗ O(1) ⊗ ω^*)` for a rational curve of degree `deg` whose
/// normal bundle splits as `O(a_1) + O(a_2) + O(a_3)` on `P^1`.
pub fn twisted_conormal_h0(splitting: &[i64], deg: i64) -> i64 {
    h0_on_p1(&splitting.iter().map(|a| deg + 2 - a).collect::<Vec<_>>())
}

/// The unique splitting `a_1 <= a_2 <= a_3` with `a_i >= min` summing to
/// `sum` and having the given [`twisted_conormal_h0`].
pub fn splitting_type_from_h0(h0: i64, sum: i64, deg: i64, min: i64) -> Result<[i64; 3], HomalgError> {
    let mut found = Vec::new();
    for a in min..=sum {
        for b in a..=sum {
            let c = sum - a - b;
            if c < b {
                continue;
            }
            if twisted_conormal_h0(&[a, b, c], deg) == h0 {
                found.push([a, b, c]);
            }
        }
    }
    match found.as_slice() {
        [one] => Ok(*one),
        _ => Err(HomalgError::InconsistentConstraints(found.len())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::PrimeField;
    use crate::mpoly::{parse_polynomial, MonomialOrder, PolyRing};

    fn ring(n: usize) -> Ring {
        PolyRing::new(PrimeField::new(67).unwrap(), n, MonomialOrder::Grevlex).unwrap()
    }

    fn ideal(r: &Ring, s: &[&str]) -> Ideal {
        Ideal::new(r, s.iter().map(|x| parse_polynomial(r, x).unwrap()).collect()).unwrap()
    }

    #[test]
    fn free_module_sections() {
        let r = ring(5);
        let f = GradedModule::free(&r, vec![0]);
        assert_eq!(sheaf_h0(&f, 2).unwrap(), 15);
        assert_eq!(sheaf_h0(&f, -1).unwrap(), 0);
    }

    #[test]
    fn conormal_of_point_and_hyperplane() {
        let r = ring(2);
        let c = conormal(&ideal(&r, &["x0"])).unwrap();
        assert_eq!(c.degrees(), &[1]);
        let r5 = ring(5);
        let p = conormal(&ideal(&r5, &["x1", "x2", "x3", "x4"])).unwrap();
        assert_eq!(p.degrees(), &[1, 1, 1, 1]);
    }

    #[test]
    fn koszul_ext() {
        let r = ring(3);
        let k = GradedModule::cyclic(&Ideal::irrelevant(&r));
        let e = ext_module(&k, 3, 0).unwrap();
        assert_eq!(e.hilbert_function(-3).unwrap(), 1);
        assert_eq!(e.hilbert_function(-2).unwrap(), 0);
        assert_eq!(ext_module(&GradedModule::free(&r, vec![0]), 1, 0).unwrap().degrees().len(), 0);
    }

    #[test]
    fn line_in_p4_normal_bundle() {
        let r = ring(5);
        let line = ideal(&r, &["x2", "x3", "x4"]);
        let a = GradedModule::cyclic(&line);
        let n = conormal(&line).unwrap().dual(Some(&line)).unwrap();
        // N = O(1)^3
        assert_eq!(sheaf_h0(&n.shift(-1), 0).unwrap(), 3);
        let omega = ext_module(&a, 3, -5).unwrap().quotient_by(&line).unwrap();
        let twisted = conormal(&line).unwrap().tensor(&omega.dual(Some(&line)).unwrap()).unwrap().shift(1);
        assert_eq!(sheaf_h0(&twisted, 0).unwrap(), 9);
    }

    /// `h^0(N^*(1) ⊗ ω^*)` straight from a parametrization `φ` of a smooth
    /// rational curve: a section is `a ∈ S_2^n` (binary forms) with
    /// `Σ a_i ∂_t φ_i = Σ a_i ∂_s φ_i = 0`.
    fn twisted_conormal_from_parametrization(phi: &[Polynomial]) -> usize {
        let r2 = phi[0].ring();
        let d = phi[0].degree().unwrap();
        let quad = monomials_of_degree(2, 2);
        let target = monomials_of_degree(2, d + 1);
        let n = phi.len();
        let mut m = crate::linalg::DenseMatrix::zeros(r2.field(), 2 * target.len(), n * quad.len());
        for (i, f) in phi.iter().enumerate() {
            for v in 0..2 {
                let df = f.derivative(v);
                for (k, q) in quad.iter().enumerate() {
                    let c = df.mul_monomial(q, 1).coefficients_on(&target);
                    for (row, x) in c.into_iter().enumerate() {
                        m.set(v * target.len() + row, i * quad.len() + k, x);
                    }
                }
            }
        }
        m.kernel().len()
    }

    #[test]
    fn rational_normal_quartic_two_routes() {
        let r = ring(5);
        let c = ideal(
            &r,
            &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x0*x4 - x2^2", "x1*x3 - x2^2", "x1*x4 - x2*x3", "x2*x4 - x3^2"],
        );
        let a = GradedModule::cyclic(&c);
        let omega = ext_module(&a, 3, -5).unwrap().quotient_by(&c).unwrap();
        let twisted = conormal(&c).unwrap().tensor(&omega.dual(Some(&c)).unwrap()).unwrap().shift(1);
        let by_modules = sheaf_h0(&twisted, 0).unwrap();
        let p1 = PolyRing::new(PrimeField::new(67).unwrap(), 2, MonomialOrder::Grevlex).unwrap();
        let phi: Vec<Polynomial> = (0..5u32)
            .map(|k| Polynomial::from_exponents(&p1, &[(vec![4 - k, k], 1)]))
            .collect();
        let by_parametrization = twisted_conormal_from_parametrization(&phi);
        assert_eq!(by_modules, by_parametrization);
        assert_eq!(by_modules as i64, twisted_conormal_h0(&[6, 6, 6], 4));
    }

    #[test]
    fn presentation_does_not_matter() {
        let r = ring(4);
        let c = ideal(&r, &["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"]);
        let m = conormal(&c).unwrap();
        let mut rels = m.relations().to_vec();
        let extra = rels[0].mul_poly(&Polynomial::var(&r, 3)).add(&rels[1].mul_poly(&Polynomial::var(&r, 0)));
        rels.push(extra);
        let padded = GradedModule::new(m.generators().clone(), rels);
        for d in 0..5 {
            assert_eq!(m.hilbert_function(d).unwrap(), padded.hilbert_function(d).unwrap());
            assert_eq!(sheaf_h0(&m, d).unwrap(), sheaf_h0(&padded.prune().unwrap(), d).unwrap());
        }
    }

    #[test]
    fn splitting_types() {
        assert_eq!(splitting_type_from_h0(1, 23, 5, 1).unwrap(), [7, 8, 8]);
        assert_eq!(twisted_conormal_h0(&[6, 6, 6], 4), 3);
        assert!(splitting_type_from_h0(3, 23, 5, 1).is_err());
    }
}
