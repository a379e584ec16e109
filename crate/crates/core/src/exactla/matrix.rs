use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{add, inv, mul, neg, sub, Subspace};
use crate::error::{Error, Result};

/// Dense row-major matrix over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FpMatrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Canonical reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: FpMatrix,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl FpMatrix {
    pub fn new(p: u32, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(FpMatrix { p, rows, cols, data: data.into_iter().map(|v| v % p).collect() })
    }

    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        FpMatrix { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % p;
        }
        m
    }

    /// Builds from rows of signed integers (reduced mod p).
    pub fn from_rows(p: u32, cols: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::Dimension(format!("row of length {} in {cols}-column matrix", r.len())));
            }
            data.extend(r.iter().map(|&v| super::reduce(v, p)));
        }
        Ok(FpMatrix { p, rows: rows.len(), cols, data })
    }

    /// Rows given as field vectors; all must have length `cols`.
    pub fn from_vecs(p: u32, cols: usize, rows: &[Vec<u32>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            data.extend_from_slice(r);
        }
        FpMatrix { p, rows: rows.len(), cols, data }
    }

    pub fn column(p: u32, v: &[u32]) -> Self {
        FpMatrix { p, rows: v.len(), cols: 1, data: v.to_vec() }
    }

    pub fn random<R: Rng + ?Sized>(p: u32, rows: usize, cols: usize, rng: &mut R) -> Self {
        FpMatrix { p, rows, cols, data: (0..rows * cols).map(|_| rng.gen_range(0..p)).collect() }
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }
    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.p;
    }
    #[inline]
    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
    pub fn data(&self) -> &[u32] {
        &self.data
    }
    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }
    pub fn col_vec(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Signed integer rows, used for serialization.
    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        self.row_vecs()
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut t = FpMatrix::zeros(self.p, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn mul(&self, o: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, o.rows, "matrix product {}x{} * {}x{}", self.rows, self.cols, o.rows, o.cols);
        let p = self.p as u64;
        let mut out = vec![0u64; self.rows * o.cols];
        // entries < 2^16, products < 2^32: accumulate a few thousand before reducing
        for i in 0..self.rows {
            let orow = &mut out[i * o.cols..(i + 1) * o.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let brow = &o.data[k * o.cols..(k + 1) * o.cols];
                for (x, &b) in orow.iter_mut().zip(brow) {
                    *x += a * b as u64;
                }
                if k % 1024 == 1023 {
                    orow.iter_mut().for_each(|x| *x %= p);
                }
            }
        }
        FpMatrix { p: self.p, rows: self.rows, cols: o.cols, data: out.into_iter().map(|x| (x % p) as u32).collect() }
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len());
        let p = self.p as u64;
        (0..self.rows)
            .map(|r| {
                let s: u64 = self.row(r).iter().zip(v).map(|(&a, &b)| a as u64 * b as u64 % p).sum();
                (s % p) as u32
            })
            .collect()
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.rows, v.len());
        let p = self.p;
        let mut out = vec![0u32; self.cols];
        for (r, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (o, &b) in out.iter_mut().zip(self.row(r)) {
                *o = add(*o, mul(a, b, p), p);
            }
        }
        out
    }

    pub fn add(&self, o: &FpMatrix) -> FpMatrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let p = self.p;
        FpMatrix {
            p,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(&a, &b)| add(a, b, p)).collect(),
        }
    }

    pub fn sub(&self, o: &FpMatrix) -> FpMatrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let p = self.p;
        FpMatrix {
            p,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(&a, &b)| sub(a, b, p)).collect(),
        }
    }

    pub fn scale(&self, s: u32) -> FpMatrix {
        let p = self.p;
        FpMatrix { p, rows: self.rows, cols: self.cols, data: self.data.iter().map(|&a| mul(a, s, p)).collect() }
    }

    /// `self += s * o`
    pub fn add_scaled(&mut self, o: &FpMatrix, s: u32) {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        if s == 0 {
            return;
        }
        let p = self.p;
        for (a, &b) in self.data.iter_mut().zip(&o.data) {
            *a = add(*a, mul(s, b, p), p);
        }
    }

    pub fn hstack(&self, o: &FpMatrix) -> FpMatrix {
        assert_eq!(self.rows, o.rows);
        let mut m = FpMatrix::zeros(self.p, self.rows, self.cols + o.cols);
        for r in 0..self.rows {
            m.data[r * m.cols..r * m.cols + self.cols].copy_from_slice(self.row(r));
            m.data[r * m.cols + self.cols..(r + 1) * m.cols].copy_from_slice(o.row(r));
        }
        m
    }

    pub fn vstack(&self, o: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, o.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&o.data);
        FpMatrix { p: self.p, rows: self.rows + o.rows, cols: self.cols, data }
    }

    /// Block-diagonal matrix.
    pub fn block_diag(p: u32, blocks: &[&FpMatrix]) -> FpMatrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = FpMatrix::zeros(p, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            m.paste(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    /// Copies `b` into `self` with top-left corner at `(r0, c0)`.
    pub fn paste(&mut self, r0: usize, c0: usize, b: &FpMatrix) {
        for r in 0..b.rows {
            let dst = (r0 + r) * self.cols + c0;
            self.data[dst..dst + b.cols].copy_from_slice(b.row(r));
        }
    }

    pub fn submatrix(&self, r0: usize, rows: usize, c0: usize, cols: usize) -> FpMatrix {
        let mut m = FpMatrix::zeros(self.p, rows, cols);
        for r in 0..rows {
            let src = (r0 + r) * self.cols + c0;
            m.data[r * cols..(r + 1) * cols].copy_from_slice(&self.data[src..src + cols]);
        }
        m
    }

    pub fn select_columns(&self, cols: &[usize]) -> FpMatrix {
        let mut m = FpMatrix::zeros(self.p, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                m.data[r * cols.len() + j] = self.get(r, c);
            }
        }
        m
    }

    pub fn select_rows(&self, rows: &[usize]) -> FpMatrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        FpMatrix { p: self.p, rows: rows.len(), cols: self.cols, data }
    }

    /// In-place Gauss-Jordan elimination; returns pivot columns.
    fn eliminate(&mut self) -> Vec<usize> {
        let p = self.p;
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for k in c..cols {
                    self.data.swap(pr * cols + k, r * cols + k);
                }
            }
            let s = inv(self.data[r * cols + c], p);
            for k in c..cols {
                let v = &mut self.data[r * cols + k];
                *v = mul(*v, s, p);
            }
            let (head, tail) = self.data.split_at_mut(r * cols);
            let (prow, rest) = tail.split_at_mut(cols);
            let prow = &prow[c..];
            let reduce_row = |row: &mut [u32]| {
                let f = row[c];
                if f != 0 {
                    let nf = (p - f) as u64;
                    for (x, &y) in row[c..].iter_mut().zip(prow) {
                        if y != 0 {
                            *x = ((*x as u64 + nf * y as u64) % p as u64) as u32;
                        }
                    }
                }
            };
            for row in head.chunks_exact_mut(cols) {
                reduce_row(row);
            }
            for row in rest.chunks_exact_mut(cols) {
                reduce_row(row);
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let pivots = m.eliminate();
        Rref { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// Null space `{v : self * v = 0}`.
    pub fn kernel(&self) -> Subspace {
        let Rref { matrix: r, pivots } = self.rref();
        let p = self.p;
        let mut is_pivot = vec![false; self.cols];
        pivots.iter().for_each(|&c| is_pivot[c] = true);
        let mut vecs = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u32; self.cols];
            v[f] = 1 % p;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = neg(r.get(i, f), p);
            }
            vecs.push(v);
        }
        Subspace::from_vecs(p, self.cols, &vecs)
    }

    /// Column space.
    pub fn image(&self) -> Subspace {
        Subspace::from_matrix_rows(&self.transpose())
    }

    /// One solution of `self * x = b` with free variables zero, or `None`.
    pub fn solve(&self, b: &[u32]) -> Result<Option<Vec<u32>>> {
        if b.len() != self.rows {
            return Err(Error::Dimension(format!("rhs of length {} for {} rows", b.len(), self.rows)));
        }
        let aug = self.hstack(&FpMatrix::column(self.p, b));
        let Rref { matrix: r, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![0u32; self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(i, self.cols);
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<FpMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let aug = self.hstack(&FpMatrix::identity(self.p, n));
        let Rref { matrix: r, pivots } = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.submatrix(0, n, n, n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn det(&self) -> u32 {
        assert!(self.is_square());
        let p = self.p;
        let n = self.rows;
        let mut m = self.clone();
        let mut det = 1 % p;
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| m.get(i, c) != 0) else {
                return 0;
            };
            if pr != c {
                for k in 0..n {
                    m.data.swap(pr * n + k, c * n + k);
                }
                det = neg(det, p);
            }
            let pv = m.get(c, c);
            det = mul(det, pv, p);
            let s = inv(pv, p);
            for i in c + 1..n {
                let f = mul(m.get(i, c), s, p);
                if f != 0 {
                    for k in c..n {
                        let v = sub(m.get(i, k), mul(f, m.get(c, k), p), p);
                        m.data[i * n + k] = v;
                    }
                }
            }
        }
        det
    }

    /// Characteristic polynomial `det(tI - A)`, coefficients lowest degree first.
    pub fn charpoly(&self) -> Vec<u32> {
        assert!(self.is_square());
        let p = self.p;
        let n = self.rows;
        let mut h = self.clone();
        // similarity reduction to upper Hessenberg form
        for j in 0..n.saturating_sub(2) {
            let Some(i) = (j + 1..n).find(|&i| h.get(i, j) != 0) else {
                continue;
            };
            if i != j + 1 {
                for k in 0..n {
                    h.data.swap(i * n + k, (j + 1) * n + k);
                }
                for k in 0..n {
                    h.data.swap(k * n + i, k * n + j + 1);
                }
            }
            let piv_inv = inv(h.get(j + 1, j), p);
            for k in j + 2..n {
                let u = mul(h.get(k, j), piv_inv, p);
                if u == 0 {
                    continue;
                }
                for c in 0..n {
                    let v = sub(h.get(k, c), mul(u, h.get(j + 1, c), p), p);
                    h.data[k * n + c] = v;
                }
                for r in 0..n {
                    let v = add(h.get(r, j + 1), mul(u, h.get(r, k), p), p);
                    h.data[r * n + j + 1] = v;
                }
            }
        }
        // recurrence on leading principal blocks
        let mut polys: Vec<Vec<u32>> = vec![vec![1 % p]];
        for m in 1..=n {
            let mut next = vec![0u32; m + 1];
            let prev = &polys[m - 1];
            let hmm = h.get(m - 1, m - 1);
            for (k, &c) in prev.iter().enumerate() {
                next[k + 1] = add(next[k + 1], c, p);
                next[k] = sub(next[k], mul(hmm, c, p), p);
            }
            let mut t = 1 % p;
            for i in 1..m {
                t = mul(t, h.get(m - i, m - i - 1), p);
                let coef = mul(t, h.get(m - 1 - i, m - 1), p);
                if coef == 0 {
                    continue;
                }
                for (k, &c) in polys[m - 1 - i].iter().enumerate() {
                    next[k] = sub(next[k], mul(coef, c, p), p);
                }
            }
            polys.push(next);
        }
        polys.pop().unwrap()
    }

    /// `A^k` by repeated squaring.
    pub fn pow(&self, mut k: usize) -> FpMatrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = FpMatrix::identity(self.p, self.rows);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    pub fn is_nilpotent(&self) -> bool {
        self.pow(self.rows).is_zero()
    }

    /// Column-major flattening.
    pub fn vectorize_colmajor(&self) -> Vec<u32> {
        let mut v = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                v.push(self.get(r, c));
            }
        }
        v
    }

    pub fn from_colmajor(p: u32, rows: usize, cols: usize, v: &[u32]) -> FpMatrix {
        assert_eq!(v.len(), rows * cols);
        let mut m = FpMatrix::zeros(p, rows, cols);
        for c in 0..cols {
            for r in 0..rows {
                m.data[r * cols + c] = v[c * rows + r];
            }
        }
        m
    }
}
