use std::collections::HashMap;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::poly::{Polynomial, Term};
use super::ring::Ring;
use super::{monomials_of_degree, PolyError};

/// A matrix of polynomials with a grading: a nonzero entry `(i, j)` has
/// degree `col_twists[j] - row_twists[i]`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
    pub row_twists: Vec<i32>,
    pub col_twists: Vec<i32>,
}

impl PolyMatrix {
    pub fn zeros(ring: &Ring, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![Polynomial::zero(ring); rows * cols],
            row_twists: vec![0; rows],
            col_twists: vec![0; cols],
        }
    }

    /// From rows of entries; twists are inferred where possible (see [`PolyMatrix::infer_twists`]).
    pub fn from_rows(ring: &Ring, rows: Vec<Vec<Polynomial>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = PolyMatrix::zeros(ring, r, c);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix");
            for (j, e) in row.into_iter().enumerate() {
                m.entries[i * c + j] = e;
            }
        }
        m.infer_twists();
        m
    }

    /// A single row, e.g. the generators of an ideal.
    pub fn row(ring: &Ring, gens: &[Polynomial]) -> Self {
        Self::from_rows(ring, vec![gens.to_vec()])
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, f: Polynomial) {
        self.entries[i * self.cols + j] = f;
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_entries(&self, i: usize) -> &[Polynomial] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// Choose row twist 0 for the first row and propagate through nonzero
    /// homogeneous entries.
    pub fn infer_twists(&mut self) {
        let mut rt: Vec<Option<i32>> = vec![None; self.rows];
        let mut ct: Vec<Option<i32>> = vec![None; self.cols];
        loop {
            let mut changed = false;
            if rt.iter().all(|x| x.is_none()) && ct.iter().all(|x| x.is_none()) && self.rows > 0 {
                rt[0] = Some(0);
                changed = true;
            }
            for i in 0..self.rows {
                for j in 0..self.cols {
                    let e = self.get(i, j);
                    if e.is_zero() || !e.is_homogeneous() {
                        continue;
                    }
                    let d = e.degree().unwrap() as i32;
                    match (rt[i], ct[j]) {
                        (Some(r), None) => {
                            ct[j] = Some(r + d);
                            changed = true;
                        }
                        (None, Some(c)) => {
                            rt[i] = Some(c - d);
                            changed = true;
                        }
                        _ => {}
                    }
                }
            }
            if !changed {
                if let Some(i) = rt.iter().position(|x| x.is_none()) {
                    rt[i] = Some(0);
                    continue;
                }
                break;
            }
        }
        self.row_twists = rt.into_iter().map(|x| x.unwrap_or(0)).collect();
        self.col_twists = ct.into_iter().map(|x| x.unwrap_or(0)).collect();
    }

    /// Whether every nonzero entry is homogeneous of the degree the twists force.
    pub fn is_graded(&self) -> bool {
        (0..self.rows).all(|i| {
            (0..self.cols).all(|j| {
                let e = self.get(i, j);
                e.is_zero()
                    || (e.is_homogeneous() && e.degree().unwrap() as i32 == self.col_twists[j] - self.row_twists[i])
            })
        })
    }

    pub fn mul(&self, o: &PolyMatrix) -> Result<PolyMatrix, PolyError> {
        if self.cols != o.rows {
            return Err(PolyError::DimensionMismatch(self.cols, o.rows));
        }
        let mut out = PolyMatrix::zeros(&self.ring, self.rows, o.cols);
        for i in 0..self.rows {
            for j in 0..o.cols {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    let b = o.get(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b));
                    }
                }
                out.set(i, j, acc);
            }
        }
        out.row_twists = self.row_twists.clone();
        out.col_twists = o.col_twists.clone();
        Ok(out)
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut out = PolyMatrix::zeros(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out.row_twists = self.col_twists.iter().map(|t| -t).collect();
        out.col_twists = self.row_twists.iter().map(|t| -t).collect();
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Select rows and columns.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let mut out = PolyMatrix::zeros(&self.ring, rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out.set(a, b, self.get(i, j).clone());
            }
        }
        out.row_twists = rows.iter().map(|&i| self.row_twists[i]).collect();
        out.col_twists = cols.iter().map(|&j| self.col_twists[j]).collect();
        out
    }
}

/// Jacobian matrix: row `i` holds the partial derivatives of `gens[i]`.
pub fn jacobian(ring: &Ring, gens: &[Polynomial]) -> PolyMatrix {
    let n = ring.nvars();
    let mut m = PolyMatrix::zeros(ring, gens.len(), n);
    for (i, g) in gens.iter().enumerate() {
        for j in 0..n {
            m.set(i, j, g.derivative(j));
        }
    }
    m.row_twists = gens.iter().map(|g| -(g.degree().unwrap_or(0) as i32)).collect();
    m.col_twists = vec![-1; n];
    m
}

/// All `k x k` minors, rows and columns taken in lexicographic order of
/// index subsets. Zero minors are kept so the count is always binomial.
pub fn minors(k: usize, m: &PolyMatrix) -> Result<Vec<Polynomial>, PolyError> {
    if k == 0 || k > m.nrows().min(m.ncols()) {
        return Err(PolyError::SizeExceeded { k, rows: m.nrows(), cols: m.ncols() });
    }
    if m.nrows() > 64 || m.ncols() > 64 {
        return Err(PolyError::SizeExceeded { k, rows: m.nrows(), cols: m.ncols() });
    }
    let row_sets = subsets(m.nrows(), k);
    let col_sets = subsets(m.ncols(), k);
    let mut memo: HashMap<(u64, u64), Polynomial> = HashMap::new();
    let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
    for rs in &row_sets {
        for cs in &col_sets {
            out.push(minor_rec(m, mask(rs), mask(cs), &mut memo));
        }
    }
    Ok(out)
}

fn mask(s: &[usize]) -> u64 {
    s.iter().fold(0u64, |a, &i| a | (1u64 << i))
}

/// Determinant of the submatrix on the row/column masks, by expansion along
/// the first selected row with memoized complementary minors.
fn minor_rec(m: &PolyMatrix, rows: u64, cols: u64, memo: &mut HashMap<(u64, u64), Polynomial>) -> Polynomial {
    if let Some(v) = memo.get(&(rows, cols)) {
        return v.clone();
    }
    let r0 = rows.trailing_zeros() as usize;
    let v = if rows.count_ones() == 1 {
        m.get(r0, cols.trailing_zeros() as usize).clone()
    } else {
        let rest = rows & !(1u64 << r0);
        let mut acc = Polynomial::zero(m.ring());
        let mut sign_neg = false;
        let mut cbits = cols;
        while cbits != 0 {
            let j = cbits.trailing_zeros() as usize;
            cbits &= cbits - 1;
            let e = m.get(r0, j);
            if !e.is_zero() {
                let sub = minor_rec(m, rest, cols & !(1u64 << j), memo);
                if !sub.is_zero() {
                    let p = e.mul(&sub);
                    acc = if sign_neg { acc.sub(&p) } else { acc.add(&p) };
                }
            }
            sign_neg = !sign_neg;
        }
        acc
    };
    memo.insert((rows, cols), v.clone());
    v
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// A dense random form of degree `d` (every coefficient uniform in `GF(p)`).
pub fn random_form(ring: &Ring, d: u32, rng: &mut impl Rng) -> Polynomial {
    let p = ring.field().p();
    let terms = monomials_of_degree(ring.nvars(), d)
        .into_iter()
        .map(|m| Term { m, c: rng.gen_range(0..p) })
        .filter(|t| t.c != 0)
        .collect();
    Polynomial::from_terms(ring, terms)
}

/// A matrix whose `(i, j)` entry is a random form of degree
/// `col_twists[j] - row_twists[i]`, deterministic in `seed`.
pub fn random_graded_matrix(
    ring: &Ring,
    row_twists: &[i32],
    col_twists: &[i32],
    seed: u64,
) -> Result<PolyMatrix, PolyError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = PolyMatrix::zeros(ring, row_twists.len(), col_twists.len());
    for (i, &r) in row_twists.iter().enumerate() {
        for (j, &c) in col_twists.iter().enumerate() {
            let d = c - r;
            if d < 0 {
                return Err(PolyError::NegativeDegree { row: i, col: j, degree: d });
            }
            m.set(i, j, random_form(ring, d as u32, &mut rng));
        }
    }
    m.row_twists = row_twists.to_vec();
    m.col_twists = col_twists.to_vec();
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::PrimeField;
    use crate::mpoly::{parse_polynomial, MonomialOrder, PolyRing};

    fn ring() -> Ring {
        PolyRing::new(PrimeField::new(67).unwrap(), 5, MonomialOrder::Grevlex).unwrap()
    }

    #[test]
    fn two_by_two() {
        let r = ring();
        let p = |s: &str| parse_polynomial(&r, s).unwrap();
        let m = PolyMatrix::from_rows(&r, vec![vec![p("x0"), p("x1")], vec![p("x2"), p("x3")]]);
        let ms = minors(2, &m).unwrap();
        assert_eq!(ms, vec![p("x0*x3 - x1*x2")]);
        assert_eq!(minors(1, &m).unwrap().len(), 4);
        assert!(minors(3, &m).is_err());
    }

    #[test]
    fn random_matrix_shape() {
        let r = ring();
        let m = random_graded_matrix(&r, &[0, 0, 0, 0], &[2, 3], 7).unwrap();
        assert!(m.is_graded());
        assert!(m.get(0, 0).len() <= 15);
        assert_eq!(m, random_graded_matrix(&r, &[0, 0, 0, 0], &[2, 3], 7).unwrap());
        let ms = minors(2, &m).unwrap();
        assert_eq!(ms.len(), 6);
        assert!(ms.iter().all(|f| f.is_homogeneous() && f.degree() == Some(5)));
        assert!(random_graded_matrix(&r, &[1], &[0], 1).is_err());
    }

    #[test]
    fn jacobian_degrees() {
        let r = ring();
        let x0sq = parse_polynomial(&r, "x0^2").unwrap();
        let j = jacobian(&r, &[x0sq]);
        assert_eq!(j.get(0, 0).to_string(), "2*x0");
        assert!(j.get(0, 1).is_zero());
        assert!(j.is_graded());
    }
}
