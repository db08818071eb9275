//! Point configurations, fat-point graded pieces, sampling points on
//! curves, and rational normal quartics through seven points.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{intersect_all, map_kernel_into, power, Ideal, IdealError};
use crate::ff::PrimeField;
use crate::groebner::buchberger;
use crate::invariants::hilbert_series;
use crate::linalg::DenseMatrix;
use crate::mpoly::{monomials_of_degree, Monomial, MonomialOrder, PolyRing, Polynomial, Ring, RingMap, Term};

use super::GradedPieceBasis;

/// The ideal of a point of projective space.
pub fn point_ideal(ring: &Ring, q: &[u32]) -> Result<Ideal, IdealError> {
    let f = ring.field();
    let n = ring.nvars();
    let q: Vec<u32> = q.iter().map(|&x| x % f.p()).collect();
    let k = q.iter().position(|&x| x != 0).ok_or(IdealError::DegeneratePosition)?;
    let mut gens = Vec::with_capacity(n - 1);
    for j in (0..n).filter(|&j| j != k) {
        let terms = vec![Term { m: Monomial::var(j), c: q[k] }, Term { m: Monomial::var(k), c: f.neg(q[j]) }];
        gens.push(Polynomial::from_terms(ring, terms));
    }
    Ideal::new(ring, gens)
}

/// Points of projective space with a prescribed multiplicity each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfiguration {
    field: PrimeField,
    points: Vec<Vec<u32>>,
    multiplicities: Vec<u32>,
}

impl PointConfiguration {
    pub fn new(field: PrimeField, points: Vec<Vec<u32>>, multiplicities: Vec<u32>) -> Result<Self, IdealError> {
        if points.len() != multiplicities.len() {
            return Err(IdealError::Poly(crate::mpoly::PolyError::DimensionMismatch(
                points.len(),
                multiplicities.len(),
            )));
        }
        let points: Vec<Vec<u32>> = points.into_iter().map(|q| q.iter().map(|&x| x % field.p()).collect()).collect();
        for (a, q) in points.iter().enumerate() {
            if q.iter().all(|&x| x == 0) {
                return Err(IdealError::DegeneratePosition);
            }
            for r in &points[..a] {
                let m = DenseMatrix::from_rows(field, q.len(), vec![q.clone(), r.clone()]);
                if m.rank() < 2 {
                    return Err(IdealError::DegeneratePosition);
                }
            }
        }
        Ok(PointConfiguration { field, points, multiplicities })
    }

    /// All points with one common multiplicity.
    pub fn uniform(field: PrimeField, points: Vec<Vec<u32>>, m: u32) -> Result<Self, IdealError> {
        let k = points.len();
        Self::new(field, points, vec![m; k])
    }

    pub fn points(&self) -> &[Vec<u32>] {
        &self.points
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    pub fn with_multiplicity(&self, m: u32) -> Self {
        PointConfiguration { field: self.field, points: self.points.clone(), multiplicities: vec![m; self.points.len()] }
    }

    /// `∩ I_q^m`, the saturated ideal of the fat points.
    pub fn ideal(&self, ring: &Ring) -> Result<Ideal, IdealError> {
        let parts = self
            .points
            .iter()
            .zip(&self.multiplicities)
            .map(|(q, &m)| Ok(power(&point_ideal(ring, q)?, m)))
            .collect::<Result<Vec<_>, IdealError>>()?;
        intersect_all(&parts)
    }
}

fn pascal(n: usize, f: PrimeField) -> Vec<Vec<u32>> {
    let mut t = vec![vec![0u32; n + 1]; n + 1];
    for a in 0..=n {
        t[a][0] = 1 % f.p();
        for b in 1..=a {
            t[a][b] = f.add(t[a - 1][b - 1], if b < a { t[a - 1][b] } else { 0 });
        }
    }
    t
}

/// Exponent vectors of total degree below `m` in `n` variables, with a
/// zero forced at position `skip`.
fn low_exponents(n: usize, skip: usize, m: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if m == 0 {
        return out;
    }
    for d in 0..m {
        for mono in monomials_of_degree(n - 1, d) {
            let mut e = mono.exponents(n - 1);
            e.insert(skip, 0);
            out.push(e);
        }
    }
    out
}

/// Degree-`d` forms with multiplicity at least `m_i` at every point and
/// lying in every ideal of `containment`.
///
/// A point `q` with `q_k != 0` is moved to a coordinate point by
/// `x_k = q_k y_0`, `x_j = q_j y_0 + y_j`; multiplicity `>= m` there means
/// the coefficients of `y_0^{d-|b|} y^b` vanish for `|b| < m`, and the
/// coefficient of `y^b` in `x^v` is `q_k^{v_k} prod_j C(v_j, b_j) q_j^{v_j - b_j}`.
/// Containment in `I` is the vanishing of the normal form modulo `I`.
pub fn graded_piece_points(
    ring: &Ring,
    config: &PointConfiguration,
    d: u32,
    containment: &[&Ideal],
) -> Result<GradedPieceBasis, IdealError> {
    let f = ring.field();
    let n = ring.nvars();
    let monos = monomials_of_degree(n, d);
    let binom = pascal(d as usize, f);
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for (q, &m) in config.points.iter().zip(&config.multiplicities) {
        if q.len() != n {
            return Err(IdealError::Poly(crate::mpoly::PolyError::DimensionMismatch(q.len(), n)));
        }
        let k = q.iter().position(|&x| x != 0).unwrap();
        // Powers q_j^e for e <= d.
        let pw: Vec<Vec<u32>> = q.iter().map(|&x| (0..=d).map(|e| f.pow(x, e as u64)).collect()).collect();
        let exps: Vec<Vec<u32>> = monos.iter().map(|v| v.exponents(n)).collect();
        for b in low_exponents(n, k, m.min(d + 1)) {
            let row = exps
                .iter()
                .map(|v| {
                    let mut c = pw[k][v[k] as usize];
                    for j in (0..n).filter(|&j| j != k) {
                        if v[j] < b[j] {
                            return 0;
                        }
                        c = f.mul(c, f.mul(binom[v[j] as usize][b[j] as usize], pw[j][(v[j] - b[j]) as usize]));
                        if c == 0 {
                            return 0;
                        }
                    }
                    c
                })
                .collect();
            rows.push(row);
        }
    }
    for ideal in containment {
        let polys: Vec<Polynomial> = monos.iter().map(|u| Polynomial::monomial(ring, *u, 1)).collect();
        let nfs = ideal.gb().normal_forms(&polys);
        let mut support: Vec<Monomial> = nfs.iter().flat_map(|r| r.terms().iter().map(|t| t.m)).collect();
        support.sort_by_key(|b| std::cmp::Reverse(b.bits()));
        support.dedup();
        for s in support {
            rows.push(nfs.iter().map(|r| r.coeff(&s)).collect());
        }
    }
    let m = DenseMatrix::from_rows(f, monos.len(), rows);
    let basis = m.kernel().into_iter().map(|v| Polynomial::from_coefficients(ring, &monos, &v)).collect();
    Ok(GradedPieceBasis { degree: d, basis })
}

/// Sample `count` distinct `GF(p)`-points of `V(I)`, which should be a
/// curve (or any positive-dimensional variety): slice with random
/// hyperplanes in a random chart, solve the zero-dimensional system by a
/// lex basis and exhaustive root search, lift back and verify.
pub fn points_on_curve(i: &Ideal, count: usize, seed: u64) -> Result<Vec<Vec<u32>>, IdealError> {
    const ATTEMPTS: usize = 64;
    let ring = i.ring();
    let f = ring.field();
    let p = f.p();
    let n = ring.nvars();
    let r = hilbert_series(i).dim;
    if r < 0 {
        return Err(IdealError::NoRationalPoint(0));
    }
    let r = r as usize;
    let m = n - 1 - r;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found: Vec<Vec<u32>> = Vec::new();
    for _ in 0..ATTEMPTS {
        let a: Vec<Vec<u32>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(0..p)).collect()).collect();
        if DenseMatrix::from_rows(f, n, a.clone()).rank() < n {
            continue;
        }
        // Chart y_0 = 1, slices y_{m+1} = .. = y_{n-1} = 0, unknowns y_1..y_m.
        let names: Vec<String> = (1..=m).map(|k| format!("y{k}")).collect();
        let aff = PolyRing::with_names(f, names, MonomialOrder::Lex)?;
        let images: Vec<Polynomial> = (0..n)
            .map(|row| {
                let mut terms = vec![Term { m: Monomial::ONE, c: a[row][0] }];
                for k in 1..=m {
                    terms.push(Term { m: Monomial::var(k - 1), c: a[row][k] });
                }
                Polynomial::from_terms(&aff, terms)
            })
            .collect();
        let sub = RingMap::new(ring, &aff, images)?;
        let eqs = i.gens().iter().map(|g| sub.apply(g)).collect::<Result<Vec<_>, _>>()?;
        let gb = buchberger(&aff, &eqs)?;
        if gb.is_unit() {
            continue;
        }
        let elems = gb.elements();
        for sol in solve_triangular(&elems, m, p) {
            let mut y = vec![0u32; n];
            y[0] = 1;
            y[1..=m].copy_from_slice(&sol);
            let x: Vec<u32> = (0..n).map(|row| crate::ff::dot_mod(f, &a[row], &y)).collect();
            if i.gens().iter().any(|g| g.eval(&x) != 0) {
                continue;
            }
            let x = normalize_point(f, &x);
            if !found.contains(&x) {
                found.push(x);
                if found.len() == count {
                    return Ok(found);
                }
            }
        }
    }
    Err(IdealError::NoRationalPoint(ATTEMPTS))
}

/// Scale so the first nonzero coordinate is 1.
pub(crate) fn normalize_point(f: PrimeField, x: &[u32]) -> Vec<u32> {
    let k = x.iter().position(|&v| v != 0).expect("nonzero point");
    let inv = f.inv(x[k]).unwrap();
    x.iter().map(|&v| f.mul(v, inv)).collect()
}

/// All `GF(p)` solutions of a zero-dimensional lex basis in `m` variables,
/// solving for the last variable first.
fn solve_triangular(gb: &[Polynomial], m: usize, p: u32) -> Vec<Vec<u32>> {
    let mut partial: Vec<Vec<u32>> = vec![vec![0; m]];
    for v in (0..m).rev() {
        let relevant: Vec<&Polynomial> = gb
            .iter()
            .filter(|g| g.terms().iter().all(|t| (0..v).all(|k| t.m.exp(k) == 0)))
            .filter(|g| g.terms().iter().any(|t| t.m.exp(v) > 0))
            .collect();
        if relevant.is_empty() {
            // Not zero-dimensional in this chart.
            return Vec::new();
        }
        let mut next = Vec::new();
        for sol in &partial {
            for a in 0..p {
                let mut s = sol.clone();
                s[v] = a;
                if relevant.iter().all(|g| g.eval(&s) == 0) {
                    next.push(s);
                }
            }
        }
        partial = next;
        if partial.is_empty() {
            break;
        }
    }
    partial
}

/// A rational normal quartic with its parametrization.
#[derive(Clone, Debug)]
pub struct RationalNormalCurve {
    pub ideal: Ideal,
    /// Quartic forms in `(t, s)` giving the coordinates of the curve.
    pub parametrization: Vec<Polynomial>,
}

/// The rational normal quartic through seven points of `P^4` in general
/// position. Six points go to the coordinate points and the unit point;
/// in those coordinates the curve is `(t:s) -> (prod_{k != j} (t - a_k s))_j`
/// with `a_j = -1/z_j` for the seventh point `z`.
pub fn rnc_through_seven(ring: &Ring, pts: &[Vec<u32>]) -> Result<RationalNormalCurve, IdealError> {
    let f = ring.field();
    let n = ring.nvars();
    if n != 5 || pts.len() != 7 || pts.iter().any(|q| q.len() != 5) {
        return Err(IdealError::DegeneratePosition);
    }
    // Columns q_0..q_4; solve sum lambda_i q_i = q_5.
    let solve = |cols: &[Vec<u32>], rhs: &[u32]| -> Option<Vec<u32>> {
        let rows: Vec<Vec<u32>> =
            (0..5).map(|r| cols.iter().map(|c| c[r] % f.p()).chain(std::iter::once(rhs[r] % f.p())).collect()).collect();
        let mut mat = DenseMatrix::from_rows(f, 6, rows);
        let piv = mat.rref();
        if piv != vec![0, 1, 2, 3, 4] {
            return None;
        }
        Some((0..5).map(|r| mat.get(r, 5)).collect())
    };
    let lambda = solve(&pts[..5], &pts[5]).ok_or(IdealError::DegeneratePosition)?;
    if lambda.contains(&0) {
        return Err(IdealError::DegeneratePosition);
    }
    let cols: Vec<Vec<u32>> = (0..5).map(|i| pts[i].iter().map(|&x| f.mul(x % f.p(), lambda[i])).collect()).collect();
    let z = solve(&cols, &pts[6]).ok_or(IdealError::DegeneratePosition)?;
    if z.contains(&0) {
        return Err(IdealError::DegeneratePosition);
    }
    let a: Vec<u32> = z.iter().map(|&x| f.neg(f.inv(x).unwrap())).collect();
    for i in 0..5 {
        if a[..i].contains(&a[i]) {
            return Err(IdealError::DegeneratePosition);
        }
    }
    let p1 = PolyRing::with_names(f, vec!["t".into(), "s".into()], MonomialOrder::Grevlex)?;
    let t = Polynomial::var(&p1, 0);
    let s = Polynomial::var(&p1, 1);
    let frame: Vec<Polynomial> = (0..5)
        .map(|j| {
            let mut acc = Polynomial::one(&p1);
            for k in (0..5).filter(|&k| k != j) {
                acc = acc.mul(&t.sub(&s.scale(a[k])));
            }
            acc
        })
        .collect();
    // x_r = sum_j cols[j][r] * frame_j
    let parametrization: Vec<Polynomial> = (0..5)
        .map(|r| {
            let mut acc = Polynomial::zero(&p1);
            for (j, fj) in frame.iter().enumerate() {
                acc = acc.add_scaled(fj, cols[j][r]);
            }
            acc
        })
        .collect();
    let ideal = map_kernel_into(&parametrization, &Ideal::zero(&p1), ring)?;
    Ok(RationalNormalCurve { ideal, parametrization })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::numeric_invariants;
    use crate::mpoly::parse_polynomial;

    fn ring(n: usize) -> Ring {
        PolyRing::new(PrimeField::new(67).unwrap(), n, MonomialOrder::Grevlex).unwrap()
    }

    #[test]
    fn triple_point_kills_quadrics() {
        let r = ring(5);
        let c = PointConfiguration::uniform(r.field(), vec![vec![1, 2, 3, 4, 5]], 3).unwrap();
        assert_eq!(graded_piece_points(&r, &c, 2, &[]).unwrap().dimension(), 0);
        let c2 = c.with_multiplicity(2);
        assert_eq!(graded_piece_points(&r, &c2, 2, &[]).unwrap().dimension(), 15 - 5);
    }

    #[test]
    fn fast_path_matches_fat_point_ideal() {
        let r = ring(4);
        let pts = vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![1, 1, 1, 1], vec![3, 7, 11, 13]];
        let c = PointConfiguration::new(r.field(), pts, vec![2, 1, 2, 3]).unwrap();
        let slow = c.ideal(&r).unwrap();
        for d in 0..6 {
            let fast = graded_piece_points(&r, &c, d, &[]).unwrap();
            assert_eq!(fast.dimension(), slow.graded_piece(d).dimension(), "degree {d}");
            for g in &fast.basis {
                assert!(slow.contains(g));
            }
        }
    }

    #[test]
    fn points_on_a_line() {
        let r = ring(5);
        let i = Ideal::new(&r, ["x2", "x3", "x4"].iter().map(|s| parse_polynomial(&r, s).unwrap()).collect()).unwrap();
        let pts = points_on_curve(&i, 3, 7).unwrap();
        assert_eq!(pts.len(), 3);
        for q in pts {
            assert_eq!(&q[2..], &[0, 0, 0]);
        }
    }

    #[test]
    fn quartic_through_seven() {
        let r = ring(5);
        let pts: Vec<Vec<u32>> = vec![
            vec![1, 0, 0, 0, 0],
            vec![0, 1, 0, 0, 0],
            vec![0, 0, 1, 0, 0],
            vec![0, 0, 0, 1, 0],
            vec![0, 0, 0, 0, 1],
            vec![1, 1, 1, 1, 1],
            vec![1, 3, 7, 11, 13],
        ];
        let c = rnc_through_seven(&r, &pts).unwrap();
        for q in &pts {
            assert!(c.ideal.gens().iter().all(|g| g.eval(q) == 0));
        }
        let inv = numeric_invariants(&c.ideal);
        assert_eq!((inv.dim, inv.degree, inv.genus), (1, 4, Some(0)));
    }
}
