//! Submodules of graded free modules: Groebner bases, syzygies, minimal
//! free resolutions and Betti tables.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::f4::{self, F4Config, Grading};
use super::{tail_reduce, GroebnerError};
use crate::mpoly::poly::canonicalize;
use crate::mpoly::{same_ring, ModuleOrderKind, Monomial, PolyMatrix, Polynomial, Ring, Term, TermOrder};

/// The free module `R(-d_0) + ... + R(-d_{r-1})`: basis element `e_i` has degree `degrees[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModule {
    ring: Ring,
    degrees: Vec<i32>,
}

impl FreeModule {
    pub fn new(ring: &Ring, degrees: Vec<i32>) -> Arc<Self> {
        Arc::new(FreeModule { ring: ring.clone(), degrees })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[i32] {
        &self.degrees
    }

    /// Term-over-position grevlex-style order (the ring's monomial order
    /// compared after twisted degree).
    pub fn order(&self) -> TermOrder {
        TermOrder::module(self.ring.order().clone(), ModuleOrderKind::TermOverPosition, self.degrees.clone())
    }
}

/// An element of a free module, terms strictly descending in the module order.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleElement {
    module: Arc<FreeModule>,
    terms: Vec<Term>,
}

impl ModuleElement {
    pub fn zero(module: &Arc<FreeModule>) -> Self {
        ModuleElement { module: module.clone(), terms: Vec::new() }
    }

    pub fn from_terms(module: &Arc<FreeModule>, terms: Vec<Term>) -> Self {
        let order = module.order();
        ModuleElement { module: module.clone(), terms: canonicalize(module.ring.field(), &order, terms) }
    }

    pub fn from_components(module: &Arc<FreeModule>, comps: &[Polynomial]) -> Self {
        assert_eq!(comps.len(), module.rank(), "component count must equal the rank");
        let mut terms = Vec::new();
        for (i, c) in comps.iter().enumerate() {
            terms.extend(c.terms().iter().map(|t| Term { m: t.m.with_pos(i as u32), c: t.c }));
        }
        Self::from_terms(module, terms)
    }

    /// The basis vector `e_i`.
    pub fn basis(module: &Arc<FreeModule>, i: usize) -> Self {
        ModuleElement { module: module.clone(), terms: vec![Term { m: Monomial::unit(i as u32), c: 1 }] }
    }

    pub fn module(&self) -> &Arc<FreeModule> {
        &self.module
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn components(&self) -> Vec<Polynomial> {
        let ring = &self.module.ring;
        let mut parts: Vec<Vec<Term>> = vec![Vec::new(); self.module.rank()];
        for t in &self.terms {
            parts[t.m.pos() as usize].push(Term { m: t.m.with_pos(0), c: t.c });
        }
        parts.into_iter().map(|p| Polynomial::from_terms(ring, p)).collect()
    }

    /// Twisted degree of the leading term.
    pub fn degree(&self) -> Option<i64> {
        let order = self.module.order();
        self.terms.iter().map(|t| order.twisted_degree(&t.m)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let order = self.module.order();
        let mut it = self.terms.iter().map(|t| order.twisted_degree(&t.m));
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn add(&self, o: &ModuleElement) -> ModuleElement {
        let order = self.module.order();
        let terms = crate::mpoly::poly::merge_add(self.module.ring.field(), &order, &self.terms, &o.terms, 1);
        ModuleElement { module: self.module.clone(), terms }
    }

    pub fn mul_poly(&self, f: &Polynomial) -> ModuleElement {
        let mut terms = Vec::with_capacity(self.terms.len() * f.len());
        let field = self.module.ring.field();
        for a in f.terms() {
            for b in &self.terms {
                terms.push(Term { m: b.m.mul(&a.m), c: field.mul(a.c, b.c) });
            }
        }
        Self::from_terms(&self.module, terms)
    }
}

impl fmt::Display for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self.components().iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", comps.join(", "))
    }
}

fn check(module: &Arc<FreeModule>, elems: &[ModuleElement]) -> Result<(), GroebnerError> {
    for e in elems {
        if !same_ring(&e.module.ring, &module.ring) || e.module.degrees != module.degrees {
            return Err(GroebnerError::RingMismatch);
        }
        if !e.is_homogeneous() {
            return Err(GroebnerError::InhomogeneousInput);
        }
    }
    Ok(())
}

/// A Groebner basis of a submodule (term-over-position order).
#[derive(Clone, Debug)]
pub struct ModuleGb {
    module: Arc<FreeModule>,
    elems: Vec<Vec<Term>>,
}

impl ModuleGb {
    pub fn module(&self) -> &Arc<FreeModule> {
        &self.module
    }

    pub fn elements(&self) -> Vec<ModuleElement> {
        self.elems.iter().map(|t| ModuleElement { module: self.module.clone(), terms: t.clone() }).collect()
    }

    pub fn lead_monomials(&self) -> Vec<Monomial> {
        self.elems.iter().map(|t| t[0].m).collect()
    }

    pub fn normal_form(&self, f: &ModuleElement) -> ModuleElement {
        let order = self.module.order();
        let r = f4::normal_forms(self.module.ring.field(), &order, &self.elems, std::slice::from_ref(&f.terms));
        ModuleElement { module: self.module.clone(), terms: r.into_iter().next().unwrap() }
    }

    pub fn contains(&self, f: &ModuleElement) -> bool {
        self.normal_form(f).is_zero()
    }
}

fn module_f4(module: &FreeModule, order: &TermOrder, rows: &[Vec<Term>], bound: Option<i64>) -> f4::F4Output {
    let cfg = F4Config {
        field: module.ring.field(),
        order,
        grading: Grading::new(module.ring.grading()),
        degree_bound: bound,
        module: true,
    };
    f4::f4(&cfg, rows)
}

/// Reduced Groebner basis of the submodule generated by `elems`, together
/// with generators of their syzygy module (in the free module whose basis
/// element `e_j` has the degree of `elems[j]`).
pub fn module_buchberger(
    module: &Arc<FreeModule>,
    elems: &[ModuleElement],
) -> Result<(ModuleGb, Vec<ModuleElement>), GroebnerError> {
    check(module, elems)?;
    let r = module.rank() as u32;
    let elem_degrees: Vec<i32> =
        elems.iter().map(|e| e.degree().unwrap_or(0) as i32).collect();
    let mut twists = module.degrees.clone();
    twists.extend(&elem_degrees);
    let aug = TermOrder::module(module.ring.order().clone(), ModuleOrderKind::Block { split: r }, twists);
    let rows: Vec<Vec<Term>> = elems
        .iter()
        .enumerate()
        .map(|(j, e)| {
            let mut t = e.terms.clone();
            t.push(Term { m: Monomial::unit(r + j as u32), c: 1 });
            t
        })
        .collect();
    let out = module_f4(module, &aug, &rows, None);
    let field = module.ring.field();
    let mut gb_rows = Vec::new();
    let syz_module = FreeModule::new(&module.ring, elem_degrees);
    let mut syz = Vec::new();
    for row in out.basis {
        if row[0].m.pos() < r {
            let f: Vec<Term> = row.into_iter().filter(|t| t.m.pos() < r).collect();
            gb_rows.push(f);
        } else {
            let terms = row.into_iter().map(|t| Term { m: t.m.with_pos(t.m.pos() - r), c: t.c }).collect();
            syz.push(ModuleElement::from_terms(&syz_module, terms));
        }
    }
    let order = module.order();
    gb_rows.sort_by(|a, b| order.cmp(&a[0].m, &b[0].m));
    // The projections form a Groebner basis; make it minimal, then reduced.
    let mut minimal: Vec<Vec<Term>> = Vec::new();
    for g in gb_rows {
        if !minimal.iter().any(|h| h[0].m.divides(&g[0].m)) {
            minimal.push(f4::monic(field, &g));
        }
    }
    let elems = tail_reduce(field, &order, minimal);
    Ok((ModuleGb { module: module.clone(), elems }, syz))
}

/// Generators of the syzygy module of `elems`.
pub fn syzygies(module: &Arc<FreeModule>, elems: &[ModuleElement]) -> Result<Vec<ModuleElement>, GroebnerError> {
    Ok(module_buchberger(module, elems)?.1)
}

/// A minimal generating subset of homogeneous `elems` (in order of degree).
pub fn minimal_module_generators(
    module: &Arc<FreeModule>,
    elems: &[ModuleElement],
) -> Result<Vec<ModuleElement>, GroebnerError> {
    check(module, elems)?;
    let nonzero: Vec<&ModuleElement> = elems.iter().filter(|e| !e.is_zero()).collect();
    if nonzero.is_empty() {
        return Ok(Vec::new());
    }
    let order = module.order();
    let rows: Vec<Vec<Term>> = nonzero.iter().map(|e| e.terms.clone()).collect();
    let bound = nonzero.iter().filter_map(|e| e.degree()).max();
    let out = module_f4(module, &order, &rows, bound);
    Ok(out.minimal_inputs.into_iter().map(|k| nonzero[k].clone()).collect())
}

/// Betti numbers `beta_{i,j}`: the number of degree-`j` generators of the
/// `i`-th free module of a minimal resolution.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, i32), usize>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: i32) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Total rank per homological index.
    pub fn totals(&self) -> Vec<usize> {
        let len = self.entries.keys().map(|(i, _)| i + 1).max().unwrap_or(0);
        let mut t = vec![0; len];
        for (&(i, _), &c) in &self.entries {
            t[i] += c;
        }
        t
    }

    pub fn length(&self) -> usize {
        self.totals().len().saturating_sub(1)
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let totals = self.totals();
        write!(f, "total:")?;
        for t in &totals {
            write!(f, " {t:>3}")?;
        }
        let rows: std::collections::BTreeSet<i32> = self.entries.keys().map(|&(i, j)| j - i as i32).collect();
        for r in rows {
            write!(f, "\n{r:>5}:")?;
            for i in 0..totals.len() {
                match self.get(i, r + i as i32) {
                    0 => write!(f, "   .")?,
                    c => write!(f, " {c:>3}")?,
                }
            }
        }
        Ok(())
    }
}

/// A minimal graded free resolution `F_0 <- F_1 <- ... <- F_n`.
#[derive(Clone, Debug)]
pub struct Resolution {
    /// `modules[i]` is `F_i`.
    pub modules: Vec<Arc<FreeModule>>,
    /// `maps[i]` is `d_{i+1}: F_{i+1} -> F_i`, rows indexed by `F_i`, columns by `F_{i+1}`.
    pub maps: Vec<PolyMatrix>,
    pub betti: BettiTable,
}

fn to_matrix(target: &FreeModule, cols: &[ModuleElement]) -> PolyMatrix {
    let ring = &target.ring;
    let mut m = PolyMatrix::zeros(ring, target.rank(), cols.len());
    for (j, c) in cols.iter().enumerate() {
        for (i, comp) in c.components().into_iter().enumerate() {
            m.set(i, j, comp);
        }
    }
    m.row_twists = target.degrees.clone();
    m.col_twists = cols.iter().map(|c| c.degree().unwrap_or(0) as i32).collect();
    m
}

/// Minimal free resolution of `F_0 / <elems>` (for an ideal `I`, pass the
/// rank-one module and the generators to resolve `R/I`).
pub fn free_resolution(
    module: &Arc<FreeModule>,
    elems: &[ModuleElement],
    max_length: usize,
) -> Result<Resolution, GroebnerError> {
    let mut modules = vec![module.clone()];
    let mut maps = Vec::new();
    let mut current = minimal_module_generators(module, elems)?;
    let mut target = module.clone();
    while !current.is_empty() && maps.len() < max_length {
        let degrees: Vec<i32> = current.iter().map(|c| c.degree().unwrap() as i32).collect();
        maps.push(to_matrix(&target, &current));
        let source = FreeModule::new(&module.ring, degrees);
        let syz = syzygies(&target, &current)?;
        // Rebase the syzygies onto `source` (same degrees by construction).
        let syz: Vec<ModuleElement> =
            syz.into_iter().map(|s| ModuleElement { module: source.clone(), terms: s.terms }).collect();
        current = minimal_module_generators(&source, &syz)?;
        modules.push(source.clone());
        target = source;
    }
    let mut betti = BettiTable::default();
    for (i, m) in modules.iter().enumerate() {
        for &d in &m.degrees {
            *betti.entries.entry((i, d)).or_insert(0) += 1;
        }
    }
    Ok(Resolution { modules, maps, betti })
}

/// Betti table of the minimal resolution of `R/I`.
pub fn betti_table(ring: &Ring, gens: &[Polynomial]) -> Result<BettiTable, GroebnerError> {
    let f0 = FreeModule::new(ring, vec![0]);
    let elems: Vec<ModuleElement> =
        gens.iter().map(|g| ModuleElement::from_components(&f0, std::slice::from_ref(g))).collect();
    Ok(free_resolution(&f0, &elems, ring.nvars() + 1)?.betti)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::PrimeField;
    use crate::mpoly::{parse_polynomial, MonomialOrder, PolyRing};

    fn ring(n: usize) -> Ring {
        PolyRing::new(PrimeField::new(67).unwrap(), n, MonomialOrder::Grevlex).unwrap()
    }

    #[test]
    fn koszul_syzygy() {
        let r = ring(2);
        let f0 = FreeModule::new(&r, vec![0]);
        let x0 = ModuleElement::from_components(&f0, &[Polynomial::var(&r, 0)]);
        let x1 = ModuleElement::from_components(&f0, &[Polynomial::var(&r, 1)]);
        let syz = syzygies(&f0, &[x0, x1]).unwrap();
        assert_eq!(syz.len(), 1);
        let c = syz[0].components();
        let expect = [parse_polynomial(&r, "x1").unwrap(), parse_polynomial(&r, "-x0").unwrap()];
        let neg = [expect[0].neg(), expect[1].neg()];
        assert!(c == expect || c == neg, "{}", syz[0]);
    }

    #[test]
    fn point_resolution_is_koszul() {
        let r = ring(5);
        let gens: Vec<Polynomial> = (1..5).map(|i| Polynomial::var(&r, i)).collect();
        let b = betti_table(&r, &gens).unwrap();
        assert_eq!(b.totals(), vec![1, 4, 6, 4, 1]);
    }

    #[test]
    fn twisted_cubic_betti() {
        let r = ring(4);
        let gens: Vec<Polynomial> = ["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"]
            .iter()
            .map(|s| parse_polynomial(&r, s).unwrap())
            .collect();
        let b = betti_table(&r, &gens).unwrap();
        assert_eq!(b.totals(), vec![1, 3, 2]);
        assert_eq!(b.get(1, 2), 3);
        assert_eq!(b.get(2, 3), 2);
    }
}
