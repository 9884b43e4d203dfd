//! Dense rational matrices and reduced-row-echelon row spaces.
//!
//! Everything here is exact. `RowSpace` maintains its rows in reduced
//! row-echelon form at all times with a deterministic pivot rule (first
//! nonzero column, rows ordered by pivot column), so a given span always
//! has exactly one representation.

use crate::rational::Rational;
use num::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    data: Vec<Rational>, // row-major
}

impl RatMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMat {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_columns(cols: &[Vec<Rational>]) -> Self {
        let ncols = cols.len();
        let nrows = cols.first().map_or(0, Vec::len);
        let mut m = RatMat::zeros(nrows, ncols);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), nrows, "ragged columns");
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add(&self, other: &RatMat) -> RatMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        RatMat { data, ..*self }
    }

    pub fn sub(&self, other: &RatMat) -> RatMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        RatMat { data, ..*self }
    }

    pub fn scale(&self, c: &Rational) -> RatMat {
        let data = self.data.iter().map(|a| a * c).collect();
        RatMat { data, ..*self }
    }

    pub fn mul(&self, other: &RatMat) -> RatMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = RatMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j) + a * b;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for (j, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        acc += self.get(i, j) * x;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn commutes_with(&self, other: &RatMat) -> bool {
        self.mul(other) == other.mul(self)
    }

    /// Canonical basis of the kernel {v : Mv = 0}, as a `RowSpace`.
    pub fn kernel(&self) -> RowSpace {
        // Echelonize the matrix rows, read off the free columns.
        let mut echelon = RowSpace::new(self.cols);
        for i in 0..self.rows {
            let row: Vec<Rational> = (0..self.cols).map(|j| self.get(i, j).clone()).collect();
            echelon.insert(row);
        }
        let pivots = echelon.pivots().to_vec();
        let mut kernel = RowSpace::new(self.cols);
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            // v[free] = 1, v[pivot_k] = -row_k[free]
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (k, &p) in pivots.iter().enumerate() {
                v[p] = -echelon.rows()[k][free].clone();
            }
            kernel.insert(v);
        }
        kernel
    }
}

/// A linear subspace of coordinate vectors, stored as a reduced
/// row-echelon basis (pivots = 1, pivot columns cleared everywhere else,
/// rows ordered by pivot column).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowSpace {
    cols: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(cols: usize) -> Self {
        RowSpace {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after elimination against the basis. Zero iff the
    /// vector lies in the span.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let c = v[p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x -= &c * r;
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Inserts `v` if independent of the current span. Returns true when the
    /// dimension grew. The basis stays in canonical reduced echelon form.
    pub fn insert(&mut self, v: Vec<Rational>) -> bool {
        let mut v = self.reduce(&v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].clone().recip();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        // clear column p in existing rows
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = row[p].clone();
                for (x, newv) in row.iter_mut().zip(&v) {
                    if !newv.is_zero() {
                        *x -= &c * newv;
                    }
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    /// Union of two spans (smallest subspace containing both).
    pub fn join(&self, other: &RowSpace) -> RowSpace {
        assert_eq!(self.cols, other.cols);
        let mut out = self.clone();
        for row in other.rows() {
            out.insert(row.clone());
        }
        out
    }
}
