//! Groebner bases of ideals and of submodules of graded free modules.
//!
//! The default engine ([`buchberger`]) reduces all S-pairs of one sugar
//! degree at once through a Macaulay matrix. [`buchberger_classic`] is the
//! textbook pair-by-pair algorithm, kept as an independent reference.

pub(crate) mod classic;
pub(crate) mod f4;
pub mod module;

use thiserror::Error;

use crate::mpoly::{same_ring, Monomial, Polynomial, Ring, Term, TermOrder};

pub use module::{
    betti_table, free_resolution, minimal_module_generators, module_buchberger, syzygies, BettiTable, FreeModule,
    ModuleElement, ModuleGb,
    Resolution,
};

use f4::{F4Config, Grading};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("generators from different rings")]
    RingMismatch,
    #[error("input is not homogeneous")]
    InhomogeneousInput,
    #[error("element has position {0} outside a free module of rank {1}")]
    PositionOutOfRange(u32, usize),
}

/// A Groebner basis of an ideal: reduced (monic, tail-reduced) and sorted
/// ascending by leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Ring,
    elems: Vec<Vec<Term>>,
    /// `None` for a complete basis; `Some(d)` if only degrees up to `d` are valid.
    truncated_at: Option<i64>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        self.truncated_at.is_none()
    }

    pub fn truncated_at(&self) -> Option<i64> {
        self.truncated_at
    }

    pub fn elements(&self) -> Vec<Polynomial> {
        self.elems.iter().map(|t| Polynomial::from_sorted(&self.ring, t.clone())).collect()
    }

    pub fn lead_monomials(&self) -> Vec<Monomial> {
        self.elems.iter().map(|t| t[0].m).collect()
    }

    /// Whether the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.elems.iter().any(|t| t[0].m.is_one())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.normal_forms(std::slice::from_ref(f)).pop().unwrap()
    }

    /// Normal forms of many polynomials through one shared Macaulay matrix.
    pub fn normal_forms(&self, fs: &[Polynomial]) -> Vec<Polynomial> {
        let order = self.ring.term_order();
        let raw: Vec<Vec<Term>> = fs.iter().map(|f| f.terms().to_vec()).collect();
        f4::normal_forms(self.ring.field(), &order, &self.elems, &raw)
            .into_iter()
            .map(|t| Polynomial::from_sorted(&self.ring, t))
            .collect()
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn contains_all(&self, fs: &[Polynomial]) -> bool {
        self.normal_forms(fs).iter().all(|r| r.is_zero())
    }
}

fn check_ring(ring: &Ring, gens: &[Polynomial]) -> Result<(), GroebnerError> {
    if gens.iter().all(|g| same_ring(g.ring(), ring)) {
        Ok(())
    } else {
        Err(GroebnerError::RingMismatch)
    }
}

fn run_f4(ring: &Ring, gens: &[Polynomial], degree_bound: Option<i64>) -> (Vec<Vec<Term>>, Vec<usize>, bool) {
    let order = ring.term_order();
    let cfg = F4Config {
        field: ring.field(),
        order: &order,
        grading: Grading::new(ring.grading()),
        degree_bound,
        module: false,
    };
    let raw: Vec<Vec<Term>> = gens.iter().map(|g| g.terms().to_vec()).collect();
    let out = f4::f4(&cfg, &raw);
    (tail_reduce(ring.field(), &order, out.basis), out.minimal_inputs, out.complete)
}

/// Tail-reduce a minimal Groebner basis (ascending leads) into the reduced one.
pub(crate) fn tail_reduce(field: crate::ff::PrimeField, order: &TermOrder, basis: Vec<Vec<Term>>) -> Vec<Vec<Term>> {
    let tails: Vec<Vec<Term>> = basis.iter().map(|b| b[1..].to_vec()).collect();
    let reduced = f4::normal_forms(field, order, &basis, &tails);
    basis
        .into_iter()
        .zip(reduced)
        .map(|(b, t)| {
            let mut f = vec![b[0]];
            f.extend(t);
            f
        })
        .collect()
}

/// The reduced Groebner basis of the ideal generated by `gens` in the
/// ring's order (matrix engine).
pub fn buchberger(ring: &Ring, gens: &[Polynomial]) -> Result<GroebnerBasis, GroebnerError> {
    check_ring(ring, gens)?;
    let (elems, _, _) = run_f4(ring, gens, None);
    Ok(GroebnerBasis { ring: ring.clone(), elems, truncated_at: None })
}

/// A basis valid in degrees `<= d`: every element of the ideal of degree
/// at most `d` reduces to zero. Only meaningful for homogeneous input.
pub fn groebner_truncated(ring: &Ring, gens: &[Polynomial], d: i64) -> Result<GroebnerBasis, GroebnerError> {
    check_ring(ring, gens)?;
    if !gens.iter().all(|g| g.is_homogeneous()) {
        return Err(GroebnerError::InhomogeneousInput);
    }
    let (elems, _, complete) = run_f4(ring, gens, Some(d));
    Ok(GroebnerBasis { ring: ring.clone(), elems, truncated_at: if complete { None } else { Some(d) } })
}

/// The textbook algorithm (pairwise S-polynomials, naive division).
pub fn buchberger_classic(ring: &Ring, gens: &[Polynomial]) -> Result<GroebnerBasis, GroebnerError> {
    check_ring(ring, gens)?;
    let order = ring.term_order();
    let raw: Vec<Vec<Term>> = gens.iter().map(|g| g.terms().to_vec()).collect();
    let elems = classic::buchberger(ring.field(), &order, &Grading::new(ring.grading()), &raw, false);
    Ok(GroebnerBasis { ring: ring.clone(), elems, truncated_at: None })
}

/// Normal form of `f` with respect to `g`.
pub fn normal_form(f: &Polynomial, g: &GroebnerBasis) -> Polynomial {
    g.normal_form(f)
}

/// Reduce a (possibly non-reduced) Groebner basis given as polynomials.
pub fn reduce_basis(ring: &Ring, g: &[Polynomial]) -> GroebnerBasis {
    let order = ring.term_order();
    let raw: Vec<Vec<Term>> = g.iter().map(|f| f.terms().to_vec()).collect();
    let elems = classic::interreduce(ring.field(), &order, raw);
    GroebnerBasis { ring: ring.clone(), elems, truncated_at: None }
}

/// Indices of a minimal generating subset of homogeneous generators.
pub fn minimal_generator_indices(ring: &Ring, gens: &[Polynomial]) -> Result<Vec<usize>, GroebnerError> {
    check_ring(ring, gens)?;
    if !gens.iter().all(|g| g.is_homogeneous()) {
        return Err(GroebnerError::InhomogeneousInput);
    }
    let max_deg = gens.iter().filter_map(|g| g.degree()).max().unwrap_or(0) as i64;
    let (_, minimal, _) = run_f4(ring, gens, Some(max_deg));
    Ok(minimal)
}

/// A minimal generating set (subset of the input) of a homogeneous ideal.
pub fn minimal_generators(ring: &Ring, gens: &[Polynomial]) -> Result<Vec<Polynomial>, GroebnerError> {
    let idx = minimal_generator_indices(ring, gens)?;
    Ok(idx.into_iter().map(|k| gens[k].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::PrimeField;
    use crate::mpoly::{parse_polynomial, MonomialOrder, PolyRing};

    fn ring(n: usize, order: MonomialOrder) -> Ring {
        PolyRing::new(PrimeField::new(67).unwrap(), n, order).unwrap()
    }

    fn polys(r: &Ring, s: &[&str]) -> Vec<Polynomial> {
        s.iter().map(|x| parse_polynomial(r, x).unwrap()).collect()
    }

    #[test]
    fn small_examples() {
        let r = ring(3, MonomialOrder::Grevlex);
        let g = buchberger(&r, &polys(&r, &["x0 + x1", "x0 - x1"])).unwrap();
        assert_eq!(g.elements(), polys(&r, &["x1", "x0"]));
        let g = buchberger(&r, &polys(&r, &["x0", "x0 + x1"])).unwrap();
        assert_eq!(g.len(), 2);
        let single = buchberger(&r, &polys(&r, &["x0^2 + x1*x2"])).unwrap();
        assert_eq!(single.elements(), polys(&r, &["x0^2 + x1*x2"]));
        let x0sq = parse_polynomial(&r, "x0^2").unwrap();
        let gx = buchberger(&r, &polys(&r, &["x0"])).unwrap();
        assert!(gx.normal_form(&x0sq).is_zero());
        let empty = buchberger(&r, &[]).unwrap();
        assert_eq!(empty.normal_form(&x0sq), x0sq);
    }

    #[test]
    fn twisted_cubic_matches_classic() {
        let r = ring(4, MonomialOrder::Grevlex);
        let gens = polys(&r, &["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"]);
        let a = buchberger(&r, &gens).unwrap();
        let b = buchberger_classic(&r, &gens).unwrap();
        assert_eq!(a.elements(), b.elements());
        let rl = ring(4, MonomialOrder::Lex);
        let gens_l: Vec<_> = gens.iter().map(|g| g.to_ring(&rl)).collect();
        let a = buchberger(&rl, &gens_l).unwrap();
        let b = buchberger_classic(&rl, &gens_l).unwrap();
        assert_eq!(a.elements(), b.elements());
    }

    #[test]
    fn cyclic4_matches_classic() {
        let r = ring(4, MonomialOrder::Grevlex);
        let gens = polys(
            &r,
            &[
                "x0 + x1 + x2 + x3",
                "x0*x1 + x1*x2 + x2*x3 + x3*x0",
                "x0*x1*x2 + x1*x2*x3 + x2*x3*x0 + x3*x0*x1",
                "x0*x1*x2*x3 - 1",
            ],
        );
        let a = buchberger(&r, &gens).unwrap();
        let b = buchberger_classic(&r, &gens).unwrap();
        assert_eq!(a.elements(), b.elements());
        assert!(a.contains_all(&gens));
    }

    #[test]
    fn minimal_generators_drop_redundant() {
        let r = ring(3, MonomialOrder::Grevlex);
        let gens = polys(&r, &["x0", "x1", "x0*x2 + x1^2", "x2^2"]);
        assert_eq!(minimal_generator_indices(&r, &gens).unwrap(), vec![0, 1, 3]);
    }
}
