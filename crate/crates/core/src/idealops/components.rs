//! Irreducible components of curves through rational points, found by
//! interpolating forms along a formal arc.
//!
//! At a smooth rational point `q` of a curve `C` the implicit function
//! theorem gives a power-series arc `x(t)` on `C` through `q`. A form of
//! degree `d` that does not contain the component through `q` meets it at
//! `q` with multiplicity at most `d * deg C`, so the forms vanishing on the
//! arc to order `d * deg C + 1` are exactly the degree-`d` forms in the ideal
//! of that component.

use super::{is_subset, points_on_curve, quotient, saturate, Ideal, IdealError};
use crate::ff::PrimeField;
use crate::invariants::hilbert_series;
use crate::linalg::{DenseMatrix, EchelonBasis};
use crate::mpoly::{monomials_of_degree, Monomial, Polynomial};

/// A truncated power series arc `t -> (x_0(t), .., x_{n-1}(t))`.
#[derive(Clone, Debug)]
pub struct FormalArc {
    field: PrimeField,
    coords: Vec<Vec<u32>>,
}

impl FormalArc {
    pub fn precision(&self) -> usize {
        self.coords[0].len()
    }

    pub fn coordinates(&self) -> &[Vec<u32>] {
        &self.coords
    }

    /// `m(x(t))` truncated to the arc's precision.
    pub fn eval_monomial(&self, m: &Monomial) -> Vec<u32> {
        let len = self.precision();
        let mut acc = vec![0u32; len];
        acc[0] = 1;
        for (v, c) in self.coords.iter().enumerate() {
            for _ in 0..m.exp(v) {
                acc = series_mul(self.field, &acc, c, len);
            }
        }
        acc
    }

    pub fn eval(&self, f: &Polynomial) -> Vec<u32> {
        let fld = self.field;
        let mut out = vec![0u32; self.precision()];
        for t in f.terms() {
            let s = self.eval_monomial(&t.m);
            for (o, x) in out.iter_mut().zip(s) {
                *o = fld.add(*o, fld.mul(t.c, x));
            }
        }
        out
    }
}

fn series_mul(f: PrimeField, a: &[u32], b: &[u32], len: usize) -> Vec<u32> {
    let mut out = vec![0u64; len];
    let p = f.p() as u64;
    for (i, &x) in a.iter().enumerate().take(len) {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate().take(len - i) {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p;
        }
    }
    out.into_iter().map(|v| v as u32).collect()
}

/// A formal arc of precision `len` on the curve `V(I)` through the smooth
/// rational point `q`.
pub fn formal_arc(i: &Ideal, q: &[u32], len: usize) -> Result<FormalArc, IdealError> {
    let ring = i.ring();
    let f = ring.field();
    let n = ring.nvars();
    if i.gens().iter().any(|g| g.eval(q) != 0) {
        return Err(IdealError::PointNotOnVariety);
    }
    let codim = n - hilbert_series(i).cone_dim;
    let gens = i.minimalize().gens().to_vec();
    // Chart x_j = 1.
    let j = (0..n).rev().find(|&k| q[k] != 0).ok_or(IdealError::PointNotOnVariety)?;
    let inv = f.inv(q[j]).unwrap();
    let q: Vec<u32> = q.iter().map(|&c| f.mul(c, inv)).collect();
    let affine: Vec<usize> = (0..n).filter(|&k| k != j).collect();
    // Rows of the Jacobian at q with independent differentials.
    let partials: Vec<Vec<Polynomial>> = gens.iter().map(|g| (0..n).map(|v| g.derivative(v)).collect()).collect();
    let mut basis = EchelonBasis::new(f, affine.len());
    let mut rows = Vec::new();
    for (r, ds) in partials.iter().enumerate() {
        let row: Vec<u32> = affine.iter().map(|&v| ds[v].eval(&q)).collect();
        if basis.insert(&row) {
            rows.push((r, row));
        }
        if rows.len() == codim {
            break;
        }
    }
    if rows.len() < codim || codim + 1 != affine.len() {
        return Err(IdealError::SingularPoint);
    }
    let jac = DenseMatrix::from_rows(f, affine.len(), rows.iter().map(|(_, r)| r.clone()).collect());
    let tangent = jac.kernel();
    let tangent = &tangent[0];
    let kpos = (0..affine.len()).find(|&a| tangent[a] != 0).unwrap();
    let unknowns: Vec<usize> = (0..affine.len()).filter(|&a| a != kpos).collect();
    // Inverse of the square Jacobian block on the unknown coordinates.
    let block = DenseMatrix::from_rows(
        f,
        codim,
        rows.iter().map(|(_, r)| unknowns.iter().map(|&u| r[u]).collect()).collect(),
    );
    let mut coords: Vec<Vec<u32>> = (0..n).map(|v| vec![q[v]]).collect();
    coords[affine[kpos]].push(1);
    for v in 0..n {
        if v != affine[kpos] {
            coords[v].push(0);
        }
    }
    let chosen: Vec<&Polynomial> = rows.iter().map(|(r, _)| &gens[*r]).collect();
    // Order 1 is solved like every other order: with a_1 = 0 for the
    // unknowns the residual is the tangent contribution of t.
    for order in 1..len {
        let arc = FormalArc { field: f, coords: coords.clone() };
        let rhs: Vec<u32> = chosen.iter().map(|g| f.neg(arc.eval(g)[order])).collect();
        let a = solve_square(&block, &rhs);
        for (slot, &u) in unknowns.iter().enumerate() {
            coords[affine[u]][order] = a[slot];
        }
        if order + 1 < len {
            for c in coords.iter_mut() {
                c.push(0);
            }
        }
    }
    Ok(FormalArc { field: f, coords })
}

fn solve_square(m: &DenseMatrix, rhs: &[u32]) -> Vec<u32> {
    let f = m.field();
    let n = m.ncols();
    let rows: Vec<Vec<u32>> = (0..m.nrows())
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.push(rhs[i]);
            r
        })
        .collect();
    let mut aug = DenseMatrix::from_rows(f, n + 1, rows);
    let pivots = aug.rref();
    let mut x = vec![0u32; n];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = aug.get(i, n);
    }
    x
}

/// Degree-`d` forms vanishing on `arc`.
fn forms_on_arc(i: &Ideal, arc: &FormalArc, d: u32) -> Vec<Polynomial> {
    let ring = i.ring();
    let monos = monomials_of_degree(ring.nvars(), d);
    let rows: Vec<Vec<u32>> = monos.iter().map(|m| arc.eval_monomial(m)).collect();
    let m = DenseMatrix::from_rows(ring.field(), arc.precision(), rows);
    m.left_kernel().iter().map(|v| Polynomial::from_coefficients(ring, &monos, v)).collect()
}

/// The ideal of the irreducible component of the curve `V(I)` through the
/// smooth rational point `q`.
pub fn component_through_point(i: &Ideal, q: &[u32]) -> Result<Ideal, IdealError> {
    let ring = i.ring();
    let h = hilbert_series(i);
    let total = h.degree.max(1) as usize;
    let top = i.max_degree().max(2) + 2;
    let arc = formal_arc(i, q, top as usize * total + 2)?;
    let mut gens = Vec::new();
    let mut prev: Option<Ideal> = None;
    for d in 1..=top {
        gens.extend(forms_on_arc(i, &arc, d));
        if gens.is_empty() {
            continue;
        }
        let cand = saturate(&Ideal::new(ring, gens.clone())?)?;
        let ok = hilbert_series(&cand).dim == 1 && is_subset(i, &cand)?;
        if ok {
            if let Some(p) = &prev {
                if is_subset(p, &cand)? && is_subset(&cand, p)? {
                    return Ok(cand);
                }
            }
            prev = Some(cand);
        } else {
            prev = None;
        }
    }
    Err(IdealError::ComponentUnstable(top))
}

/// The irreducible components of the one-dimensional part of `V(I)`,
/// peeled off one at a time through sampled smooth rational points.
pub fn curve_components(i: &Ideal, seed: u64, max_components: usize) -> Result<Vec<Ideal>, IdealError> {
    let mut rest = saturate(i)?;
    let mut out: Vec<Ideal> = Vec::new();
    let mut attempt = 0u64;
    while hilbert_series(&rest).dim == 1 && out.len() < max_components {
        let pts = points_on_curve(&rest, 8, seed.wrapping_add(attempt))?;
        attempt += 1;
        let q = pts.into_iter().find(|q| out.iter().all(|c| c.gens().iter().any(|g| g.eval(q) != 0)));
        let Some(q) = q else { continue };
        let comp = match component_through_point(&rest, &q) {
            Ok(c) => c,
            Err(IdealError::SingularPoint) if attempt < 64 => continue,
            Err(e) => return Err(e),
        };
        rest = saturate(&quotient(&rest, &comp)?)?;
        out.push(comp);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::idealops::intersect;
    use crate::invariants::numeric_invariants;
    use crate::mpoly::{parse_polynomial, MonomialOrder, PolyRing, Ring};

    fn ring(n: usize) -> Ring {
        PolyRing::new(PrimeField::new(67).unwrap(), n, MonomialOrder::Grevlex).unwrap()
    }

    fn ideal(r: &Ring, s: &[&str]) -> Ideal {
        Ideal::new(r, s.iter().map(|x| parse_polynomial(r, x).unwrap()).collect()).unwrap()
    }

    #[test]
    fn arc_stays_on_curve() {
        let r = ring(4);
        let c = ideal(&r, &["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"]);
        let arc = formal_arc(&c, &[1, 2, 4, 8], 12).unwrap();
        for g in c.gens() {
            assert!(arc.eval(g).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn splits_line_and_conic() {
        let r = ring(4);
        let line = ideal(&r, &["x0", "x1"]);
        let conic = ideal(&r, &["x3", "x0*x2 - x1^2"]);
        let u = intersect(&line, &conic).unwrap();
        let a = component_through_point(&u, &[0, 0, 1, 5]).unwrap();
        assert!(is_subset(&a, &line).unwrap() && is_subset(&line, &a).unwrap());
        let b = component_through_point(&u, &[1, 3, 9, 0]).unwrap();
        assert_eq!(numeric_invariants(&b).degree, 2);
        let all = curve_components(&u, 3, 4).unwrap();
        let mut degs: Vec<i64> = all.iter().map(|c| numeric_invariants(c).degree).collect();
        degs.sort();
        assert_eq!(degs, vec![1, 2]);
    }
}
