//! Dense matrices over exact rationals.
//!
//! Every linear-algebra question in this crate (ranks, kernels, Hom spaces,
//! cohomology) is answered over `Q` with exact arithmetic, so there are no
//! tolerances anywhere. Vectors are rows and matrices act on the right,
//! matching the right-module convention used by [`crate::rep`].

use num_traits::{One, Zero};

/// The scalar field: arbitrary-precision rationals.
pub type Rat = num_rational::BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// A dense `rows x cols` matrix over [`Rat`], row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct QMat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl std::fmt::Debug for QMat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "QMat {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl QMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMat { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        QMat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        assert!(rows.iter().all(|v| v.len() == c), "ragged rows");
        QMat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Matrix of integer entries, handy in tests.
    pub fn from_i64(rows: Vec<Vec<i64>>) -> Self {
        Self::from_rows(rows.into_iter().map(|v| v.into_iter().map(rat).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> QMat {
        QMat::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn mul(&self, other: &QMat) -> QMat {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let mut out = QMat::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if !b.is_zero() {
                        let v = out.at(r, c).clone() + a * b;
                        out.set(r, c, v);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &QMat) -> QMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        QMat::from_fn(self.rows, self.cols, |r, c| self.at(r, c) + other.at(r, c))
    }

    pub fn scale(&self, s: &Rat) -> QMat {
        QMat::from_fn(self.rows, self.cols, |r, c| self.at(r, c) * s)
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &QMat) -> QMat {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        QMat { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn row(&self, r: usize) -> Vec<Rat> {
        (0..self.cols).map(|c| self.at(r, c).clone()).collect()
    }

    /// Reduced row echelon form together with the pivot column of each
    /// nonzero row.
    pub fn rref(&self) -> (QMat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            if pr != row {
                for c in 0..m.cols {
                    let idx_a = pr * m.cols + c;
                    let idx_b = row * m.cols + c;
                    m.data.swap(idx_a, idx_b);
                }
            }
            let inv = Rat::one() / m.at(row, col).clone();
            for c in col..m.cols {
                let v = m.at(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r != row && !m.at(r, col).is_zero() {
                    let factor = m.at(r, col).clone();
                    for c in col..m.cols {
                        let v = m.at(r, c) - m.at(row, c) * &factor;
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the row space, one basis vector per row.
    pub fn row_space(&self) -> QMat {
        let (r, pivots) = self.rref();
        let mut rows = Vec::new();
        for i in 0..pivots.len() {
            rows.push(r.row(i));
        }
        QMat::from_rows_with_cols(rows, self.cols)
    }

    /// Basis of `{ x : x * self = 0 }` (left kernel), one basis vector per row.
    pub fn row_kernel(&self) -> QMat {
        // Left kernel of A = ordinary kernel of A^T.
        let t = self.transpose();
        let (r, pivots) = t.rref();
        let n = t.cols; // = self.rows
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..n).filter(|c| !pivot_set.contains(c)).collect();
        let mut rows = Vec::new();
        for &fc in &free {
            let mut v = vec![Rat::zero(); n];
            v[fc] = Rat::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.at(i, fc).clone();
            }
            rows.push(v);
        }
        QMat::from_rows_with_cols(rows, n)
    }

    /// Solve `X * self = b` for `X` (one row of `X` per row of `b`).
    /// Returns `None` when some row of `b` is not in the row space.
    pub fn solve_left(&self, b: &QMat) -> Option<QMat> {
        assert_eq!(self.cols, b.cols, "shape mismatch in solve_left");
        // X A = B  <=>  A^T X^T = B^T: reduce [A^T | B^T].
        let at = self.transpose();
        let bt = b.transpose();
        let aug = QMat::from_fn(at.rows, at.cols + bt.cols, |r, c| {
            if c < at.cols {
                at.at(r, c).clone()
            } else {
                bt.at(r, c - at.cols).clone()
            }
        });
        let (red, _) = aug.rref();
        let mut xt = QMat::zeros(at.cols, bt.cols);
        for r in 0..red.rows {
            let pivot = (0..at.cols).find(|&c| !red.at(r, c).is_zero());
            match pivot {
                Some(p) => {
                    for c in 0..bt.cols {
                        let v = red.at(r, at.cols + c).clone();
                        xt.set(p, c, v);
                    }
                }
                None => {
                    // Zero left-hand side: right-hand side must vanish too.
                    if (0..bt.cols).any(|c| !red.at(r, at.cols + c).is_zero()) {
                        return None;
                    }
                }
            }
        }
        Some(xt.transpose())
    }

    /// True when the matrix is square and invertible.
    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    fn from_rows_with_cols(rows: Vec<Vec<Rat>>, cols: usize) -> QMat {
        let r = rows.len();
        assert!(rows.iter().all(|v| v.len() == cols));
        QMat { rows: r, cols, data: rows.into_iter().flatten().collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_rank_kernel() {
        let a = QMat::from_i64(vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        assert_eq!(a.rank(), 2);
        let k = a.row_kernel();
        assert_eq!(k.rows(), 1);
        assert!(k.mul(&a).is_zero());
    }

    #[test]
    fn solve_left_exact() {
        let a = QMat::from_i64(vec![vec![1, 1], vec![0, 1]]);
        let b = QMat::from_i64(vec![vec![2, 5]]);
        let x = a.solve_left(&b).unwrap();
        assert_eq!(x.mul(&a), b);
        // Inconsistent system has no solution.
        let a2 = QMat::from_i64(vec![vec![1, 0], vec![2, 0]]);
        let b2 = QMat::from_i64(vec![vec![0, 1]]);
        assert!(a2.solve_left(&b2).is_none());
    }

    #[test]
    fn row_space_dims() {
        let a = QMat::from_i64(vec![vec![1, 0], vec![1, 0], vec![0, 0]]);
        assert_eq!(a.row_space().rows(), 1);
        assert_eq!(QMat::zeros(3, 2).row_space().rows(), 0);
        assert!(QMat::identity(4).is_invertible());
    }
}
