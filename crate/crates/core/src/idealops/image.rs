//! Images of rational maps `V(I) --> P^{m-1}` given by forms of one degree.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{saturate_wrt, Ideal, IdealError};
use crate::groebner::buchberger;
use crate::invariants::hilbert_series;
use crate::linalg::{DenseMatrix, EchelonBasis};
use crate::mpoly::{Monomial, MonomialOrder, PolyRing, Polynomial, Ring};

fn common_degree(forms: &[Polynomial]) -> Result<u32, IdealError> {
    let mut d = None;
    for g in forms.iter().filter(|g| !g.is_zero()) {
        if !g.is_homogeneous() {
            return Err(IdealError::Inhomogeneous);
        }
        match (d, g.degree()) {
            (None, e) => d = e,
            (Some(a), Some(b)) if a != b => return Err(IdealError::Inhomogeneous),
            _ => {}
        }
    }
    d.ok_or(IdealError::AllFormsVanish)
}

/// Ideal of the closure of the image of `V(I)` under `forms`, in `target`
/// (whose variables correspond to the forms). Computed by eliminating the
/// source variables from `I + (y_j - f_j)`, with `y_j` of degree `deg f`.
pub fn map_kernel_into(forms: &[Polynomial], i: &Ideal, target: &Ring) -> Result<Ideal, IdealError> {
    let src = i.ring();
    if forms.len() != target.nvars() {
        return Err(IdealError::Poly(crate::mpoly::PolyError::DimensionMismatch(forms.len(), target.nvars())));
    }
    let e = common_degree(forms)?;
    if forms.iter().all(|g| i.contains(g)) {
        return Err(IdealError::AllFormsVanish);
    }
    let n = src.nvars();
    let mut names: Vec<String> = src.names().to_vec();
    for nm in target.names() {
        let mut nm = nm.clone();
        while names.contains(&nm) {
            nm.push('_');
        }
        names.push(nm);
    }
    let mut grading = src.grading().to_vec();
    grading.extend(std::iter::repeat_n(e, forms.len()));
    let g = PolyRing::build(src.field(), names, MonomialOrder::elim(n), grading)?;
    let lift = |f: &Polynomial| f.map_monomials(&g, |m| *m);
    let mut gens: Vec<Polynomial> = i.gens().iter().map(lift).collect();
    for (j, f) in forms.iter().enumerate() {
        gens.push(Polynomial::var(&g, n + j).sub(&lift(f)));
    }
    let gb = buchberger(&g, &gens)?;
    let elems: Vec<Polynomial> = gb
        .elements()
        .into_iter()
        .filter(|h| h.terms().iter().all(|t| (0..n).all(|v| t.m.exp(v) == 0)))
        .map(|h| h.map_monomials(target, |m| m.remove_lanes(0, n)))
        .collect();
    Ideal::new(target, elems)
}

/// [`map_kernel_into`] a fresh ring `y0..y{m-1}`.
pub fn map_kernel(forms: &[Polynomial], i: &Ideal) -> Result<Ideal, IdealError> {
    let src = i.ring();
    let target = PolyRing::with_names(
        src.field(),
        (0..forms.len()).map(|k| format!("y{k}")).collect(),
        MonomialOrder::Grevlex,
    )?;
    map_kernel_into(forms, i, &target)
}

/// Linear relations of degree `k` among the forms modulo `I`, as forms in
/// a fresh ring `y0..y{m-1}`: the kernel of `Sym^k -> (R/I)_{k e}`.
pub fn relations_in_degree(forms: &[Polynomial], i: &Ideal, k: u32) -> Result<Vec<Polynomial>, IdealError> {
    let src = i.ring();
    common_degree(forms)?;
    let m = forms.len();
    let target = PolyRing::with_names(src.field(), (0..m).map(|j| format!("y{j}")).collect(), MonomialOrder::Grevlex)?;
    let gb = i.gb();
    let reduced_forms = gb.normal_forms(forms);
    // Products level by level, indexed by target monomials.
    let mut level: Vec<(Monomial, Polynomial)> = vec![(Monomial::ONE, Polynomial::one(src))];
    for _ in 0..k {
        let mut next_m = Vec::new();
        let mut next_p = Vec::new();
        for (mono, prod) in &level {
            // Multiply by y_j for j at least the last variable used, so each
            // monomial arises once.
            let last = (0..m).rev().find(|&j| mono.exp(j) > 0).unwrap_or(0);
            for (j, fj) in reduced_forms.iter().enumerate().skip(last) {
                next_m.push(mono.mul(&Monomial::var(j)));
                next_p.push(prod.mul(fj));
            }
        }
        let nfs = gb.normal_forms(&next_p);
        level = next_m.into_iter().zip(nfs).collect();
    }
    let mut support: Vec<Monomial> = level.iter().flat_map(|(_, p)| p.terms().iter().map(|t| t.m)).collect();
    support.sort_by_key(|m| m.bits());
    support.dedup();
    let rows: Vec<Vec<u32>> = support.iter().map(|s| level.iter().map(|(_, p)| p.coeff(s)).collect()).collect();
    let monos: Vec<Monomial> = level.iter().map(|(m, _)| *m).collect();
    let ker = if rows.is_empty() {
        (0..monos.len())
            .map(|a| (0..monos.len()).map(|b| u32::from(a == b)).collect())
            .collect()
    } else {
        DenseMatrix::from_rows(src.field(), monos.len(), rows).kernel()
    };
    Ok(ker.into_iter().map(|v| Polynomial::from_coefficients(&target, &monos, &v)).collect())
}

/// Dimension and degree of the image of a rational map, and its degree
/// onto the image when the general fibre is finite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImageInvariants {
    pub source_dim: i64,
    pub dim: i64,
    pub degree: i64,
    /// Degree of the preimage of a general codimension-`dim` linear space
    /// (the self-intersection of the pulled-back hyperplane class).
    pub preimage_degree: Option<i64>,
    pub map_degree: Option<i64>,
}

/// Image invariants through a seeded generic projection to `P^{r+1}`.
///
/// With `L_0..L_{r+1}` generic combinations of the forms, the preimage of
/// `{L_1 = .. = L_c = 0}` off the base locus is `Z_c = (I + (L_1..L_c)) :
/// B^∞` with `B` the ideal of the forms. The image dimension is the
/// largest `c` with `Z_c` nonempty. For that `c` the image of `Z_c` is a
/// general linear section of the image; its number of points, read off as
/// the stable dimension of the span of products of the `L_j` modulo `Z_c`,
/// is the degree of the image.
pub fn image_invariants(forms: &[Polynomial], i: &Ideal, seed: u64) -> Result<ImageInvariants, IdealError> {
    common_degree(forms)?;
    if forms.iter().all(|g| i.contains(g)) {
        return Err(IdealError::AllFormsVanish);
    }
    let ring = i.ring();
    let p = ring.field().p();
    let r = hilbert_series(i).dim;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let proj: Vec<Polynomial> = (0..(r + 2) as usize)
        .map(|_| {
            let mut acc = Polynomial::zero(ring);
            for f in forms {
                acc = acc.add_scaled(f, rng.gen_range(0..p));
            }
            acc
        })
        .collect();
    let base = Ideal::new(ring, forms.to_vec())?;
    let mut gens = i.gens().to_vec();
    let mut z = saturate_wrt(i, &base)?;
    if z.is_unit() {
        return Err(IdealError::AllFormsVanish);
    }
    let mut c = 0usize;
    loop {
        if c == proj.len() - 1 {
            return Err(IdealError::ProjectionNotGeneric(seed));
        }
        gens.push(proj[c].clone());
        let next = saturate_wrt(&Ideal::new(ring, gens.clone())?, &base)?;
        if next.is_unit() {
            break;
        }
        z = next;
        c += 1;
    }
    let zh = hilbert_series(&z);
    // Stable span of products of the remaining projected forms modulo Z.
    let rest: Vec<Polynomial> = z.gb().normal_forms(&proj[c..]);
    let mut span = vec![Polynomial::one(ring)];
    let mut prev = 1usize;
    let mut degree;
    loop {
        let mut prods = Vec::new();
        for b in &span {
            for l in &rest {
                prods.push(b.mul(l));
            }
        }
        let nfs = z.gb().normal_forms(&prods);
        let mut support: Vec<Monomial> = nfs.iter().flat_map(|p| p.terms().iter().map(|t| t.m)).collect();
        support.sort_by_key(|m| m.bits());
        support.dedup();
        let mut ech = EchelonBasis::new(ring.field(), support.len());
        let mut basis = Vec::new();
        for f in nfs {
            if ech.insert(&f.coefficients_on(&support)) {
                basis.push(f);
            }
        }
        degree = basis.len();
        if degree == prev {
            break;
        }
        if degree > 4096 {
            return Err(IdealError::ProjectionNotGeneric(seed));
        }
        prev = degree;
        span = basis;
    }
    let degree = degree as i64;
    let (preimage_degree, map_degree) = if zh.dim == 0 {
        let pd = zh.degree;
        (Some(pd), (pd % degree == 0).then_some(pd / degree))
    } else {
        (None, None)
    };
    if zh.dim == 0 && map_degree.is_none() {
        return Err(IdealError::ProjectionNotGeneric(seed));
    }
    Ok(ImageInvariants { source_dim: r, dim: c as i64, degree, preimage_degree, map_degree })
}

/// Degree of the map onto its image (general fibre must be finite).
pub fn map_degree(forms: &[Polynomial], i: &Ideal, seed: u64) -> Result<i64, IdealError> {
    image_invariants(forms, i, seed)?.map_degree.ok_or(IdealError::ProjectionNotGeneric(seed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::PrimeField;
    use crate::mpoly::parse_polynomial;

    #[test]
    fn veronese_conic() {
        let f = PrimeField::new(67).unwrap();
        let r = PolyRing::new(f, 2, MonomialOrder::Grevlex).unwrap();
        let forms: Vec<Polynomial> = ["x0^2", "x0*x1", "x1^2"].iter().map(|s| parse_polynomial(&r, s).unwrap()).collect();
        let k = map_kernel(&forms, &Ideal::zero(&r)).unwrap();
        let els = k.gb().elements();
        assert_eq!(els.len(), 1);
        assert_eq!(els[0].to_string(), "y1^2 - y0*y2");
        let rel = relations_in_degree(&forms, &Ideal::zero(&r), 2).unwrap();
        assert_eq!(rel.len(), 1);
        let inv = image_invariants(&forms, &Ideal::zero(&r), 1).unwrap();
        assert_eq!((inv.dim, inv.degree, inv.map_degree), (1, 2, Some(1)));
    }

    #[test]
    fn squaring_map_has_degree_two() {
        let f = PrimeField::new(67).unwrap();
        let r = PolyRing::new(f, 2, MonomialOrder::Grevlex).unwrap();
        let forms: Vec<Polynomial> = ["x0^2", "x1^2"].iter().map(|s| parse_polynomial(&r, s).unwrap()).collect();
        let inv = image_invariants(&forms, &Ideal::zero(&r), 3).unwrap();
        assert_eq!((inv.dim, inv.degree, inv.preimage_degree, inv.map_degree), (1, 1, Some(2), Some(2)));
    }
}
