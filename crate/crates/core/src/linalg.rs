//! Dense linear algebra over `GF(p)`: echelon forms, rank, kernels.

use crate::ff::PrimeField;

/// A dense row-major matrix with entries in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl DenseMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        DenseMatrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn from_rows(field: PrimeField, cols: usize, rows: Vec<Vec<u32>>) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r.into_iter().map(|v| v % field.p()));
        }
        DenseMatrix { field, rows: n, cols, data }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v % self.field.p();
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn push_row(&mut self, r: &[u32]) {
        assert_eq!(r.len(), self.cols);
        let p = self.field.p();
        self.data.extend(r.iter().map(|v| v % p));
        self.rows += 1;
    }

    pub fn transpose(&self) -> DenseMatrix {
        let mut t = DenseMatrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    /// `row[i] -= c * row[k]` on columns `from..`.
    fn axpy(&mut self, i: usize, k: usize, c: u32, from: usize) {
        let p = self.field.p() as u64;
        let neg = (p - c as u64) % p;
        let cols = self.cols;
        let (a, b) = if i < k {
            let (lo, hi) = self.data.split_at_mut(k * cols);
            (&mut lo[i * cols..(i + 1) * cols], &hi[..cols])
        } else {
            let (lo, hi) = self.data.split_at_mut(i * cols);
            (&mut hi[..cols], &lo[k * cols..(k + 1) * cols])
        };
        for j in from..cols {
            if b[j] != 0 {
                a[j] = ((a[j] as u64 + neg * b[j] as u64) % p) as u32;
            }
        }
    }

    /// Reduced row echelon form in place; returns the pivot columns. Zero
    /// rows end up at the bottom.
    pub fn rref(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(k) = (r..self.rows).find(|&i| self.get(i, c) != 0) else { continue };
            if k != r {
                for j in 0..self.cols {
                    self.data.swap(k * self.cols + j, r * self.cols + j);
                }
            }
            let inv = f.inv(self.get(r, c)).expect("nonzero pivot");
            for j in c..self.cols {
                let v = self.data[r * self.cols + j];
                self.data[r * self.cols + j] = f.mul(v, inv);
            }
            for i in 0..self.rows {
                if i != r {
                    let v = self.get(i, c);
                    if v != 0 {
                        self.axpy(i, r, v, c);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        // Echelonize the shorter side.
        let mut m = if self.rows > self.cols { self.transpose() } else { self.clone() };
        m.rref().len()
    }

    /// Basis of the right kernel `{v : M v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<u32>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let f = self.field;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u32; self.cols];
            v[free] = 1;
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = f.neg(m.get(r, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Basis of the left kernel `{w : w M = 0}`.
    pub fn left_kernel(&self) -> Vec<Vec<u32>> {
        self.transpose().kernel()
    }

    /// Row space basis (rows of the reduced echelon form).
    pub fn row_space(&self) -> Vec<Vec<u32>> {
        let mut m = self.clone();
        let k = m.rref().len();
        (0..k).map(|i| m.row(i).to_vec()).collect()
    }

    /// `M v`
    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|i| crate::ff::dot_mod(self.field, self.row(i), v)).collect()
    }
}

/// Incremental row echelon basis: insert vectors one at a time and learn
/// whether each was independent of the previous ones.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: PrimeField,
    cols: usize,
    /// Rows normalized with lead 1 at `leads[k]`, kept fully reduced
    /// against each other's lead columns.
    rows: Vec<Vec<u32>>,
    leads: Vec<usize>,
    lead_of_col: Vec<Option<usize>>,
}

impl EchelonBasis {
    pub fn new(field: PrimeField, cols: usize) -> Self {
        EchelonBasis { field, cols, rows: Vec::new(), leads: Vec::new(), lead_of_col: vec![None; cols] }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Reduce `v` against the basis.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let p = self.field.p() as u64;
        let mut acc: Vec<u64> = v.iter().map(|&x| x as u64 % p).collect();
        for c in 0..self.cols {
            let x = acc[c] % p;
            acc[c] = x;
            if x == 0 {
                continue;
            }
            if let Some(k) = self.lead_of_col[c] {
                let neg = p - x;
                for (j, &b) in self.rows[k].iter().enumerate().skip(c) {
                    if b != 0 {
                        acc[j] = (acc[j] + neg * b as u64) % p;
                    }
                }
            }
        }
        acc.into_iter().map(|x| (x % p) as u32).collect()
    }

    /// Insert `v`; returns `true` if it enlarged the span.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        let r = self.reduce(v);
        let Some(c) = r.iter().position(|&x| x != 0) else { return false };
        let inv = self.field.inv(r[c]).unwrap();
        let r: Vec<u32> = r.iter().map(|&x| self.field.mul(x, inv)).collect();
        self.lead_of_col[c] = Some(self.rows.len());
        self.rows.push(r);
        self.leads.push(c);
        true
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_kernel() {
        let f = PrimeField::new(7).unwrap();
        let m = DenseMatrix::from_rows(f, 3, vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!(m.mul_vec(&k[0]).iter().all(|&x| x == 0));
        assert_eq!(m.left_kernel().len(), 1);
    }

    #[test]
    fn echelon_insert() {
        let f = PrimeField::new(5).unwrap();
        let mut e = EchelonBasis::new(f, 3);
        assert!(e.insert(&[1, 1, 0]));
        assert!(e.insert(&[0, 1, 1]));
        assert!(!e.insert(&[1, 2, 1]));
        assert!(e.insert(&[0, 0, 3]));
        assert_eq!(e.rank(), 3);
    }
}
