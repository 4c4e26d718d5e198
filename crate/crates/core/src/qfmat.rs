//! Dense matrices over Q(√5) with exact rank, products and Gram-Schmidt.

use std::ops::{Index, IndexMut};

use crate::perm::IntMat6;
use crate::qf::QfElem;

/// A rows×cols matrix of exact Q(√5) scalars, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QfMat {
    rows: usize,
    cols: usize,
    data: Vec<QfElem>,
}

impl QfMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QfMat { rows, cols, data: vec![QfElem::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QfMat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = QfElem::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> QfElem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        QfMat { rows, cols, data }
    }

    pub fn from_int_mat(m: &IntMat6) -> Self {
        QfMat::from_fn(6, 6, |i, j| QfElem::from_int(i64::from(m.entries[i][j])))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn transpose(&self) -> QfMat {
        QfMat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn multiply(&self, rhs: &QfMat) -> QfMat {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = QfMat::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let term = a * &rhs[(k, j)];
                    out[(i, j)] += &term;
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &QfMat) -> QfMat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        QfMat::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] + &rhs[(i, j)])
    }

    pub fn sub(&self, rhs: &QfMat) -> QfMat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        QfMat::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] - &rhs[(i, j)])
    }

    pub fn scale(&self, s: &QfElem) -> QfMat {
        QfMat::from_fn(self.rows, self.cols, |i, j| s * &self[(i, j)])
    }

    pub fn trace(&self) -> QfElem {
        assert_eq!(self.rows, self.cols);
        let mut t = QfElem::zero();
        for i in 0..self.rows {
            t += &self[(i, i)];
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(QfElem::is_zero)
    }

    pub fn column(&self, j: usize) -> Vec<QfElem> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_slice(&self, i: usize) -> &[QfElem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn from_columns(cols: &[Vec<QfElem>]) -> QfMat {
        let rows = cols[0].len();
        assert!(cols.iter().all(|c| c.len() == rows));
        QfMat::from_fn(rows, cols.len(), |i, j| cols[j][i].clone())
    }

    /// Submatrix `[r0..r1) × [c0..c1)`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> QfMat {
        QfMat::from_fn(r1 - r0, c1 - c0, |i, j| self[(r0 + i, c0 + j)].clone())
    }

    /// Exact rank by Gaussian elimination; division in a field keeps every
    /// intermediate value exact, and the result is pivot-order independent.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..m.cols {
            let pivot = (row..m.rows).find(|&r| !m[(r, col)].is_zero());
            let pivot = match pivot {
                Some(p) => p,
                None => continue,
            };
            m.swap_rows(row, pivot);
            let inv = m[(row, col)].inverse();
            for r in row + 1..m.rows {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let factor = &m[(r, col)] * &inv;
                for c in col..m.cols {
                    let delta = &factor * &m[(row, c)];
                    let val = &m[(r, c)] - &delta;
                    m[(r, c)] = val;
                }
            }
            rank += 1;
            row += 1;
            if row == m.rows {
                break;
            }
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl Index<(usize, usize)> for QfMat {
    type Output = QfElem;
    fn index(&self, (i, j): (usize, usize)) -> &QfElem {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for QfMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut QfElem {
        &mut self.data[i * self.cols + j]
    }
}

/// Exact inner product of two column vectors.
pub fn dot(u: &[QfElem], v: &[QfElem]) -> QfElem {
    assert_eq!(u.len(), v.len());
    let mut acc = QfElem::zero();
    for (a, b) in u.iter().zip(v) {
        acc += &(a * b);
    }
    acc
}

/// Unnormalized Gram-Schmidt: returns pairwise-orthogonal vectors spanning
/// the same space, entries staying in Q(√5). Zero vectors are dropped.
pub fn gram_schmidt(vectors: &[Vec<QfElem>]) -> Vec<Vec<QfElem>> {
    let mut basis: Vec<Vec<QfElem>> = Vec::new();
    for v in vectors {
        let mut u = v.clone();
        for b in &basis {
            let coeff = &dot(&u, b) / &dot(b, b);
            for (uk, bk) in u.iter_mut().zip(b) {
                *uk -= &(&coeff * bk);
            }
        }
        if u.iter().any(|x| !x.is_zero()) {
            basis.push(u);
        }
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tau_mat() -> QfMat {
        let t = QfElem::tau();
        QfMat::from_fn(2, 2, |i, j| match (i, j) {
            (0, 0) => t.clone(),
            (0, 1) | (1, 0) => QfElem::one(),
            _ => &QfElem::one() - &t,
        })
    }

    #[test]
    fn product_with_identity() {
        let m = tau_mat();
        assert_eq!(m.multiply(&QfMat::identity(2)), m);
        assert_eq!(QfMat::identity(2).multiply(&m), m);
    }

    #[test]
    fn rank_detects_defect() {
        // [[τ, 1], [τ+1, τ]] has determinant τ² - τ - 1 = 0.
        let t = QfElem::tau();
        let singular = QfMat::from_fn(2, 2, |i, j| match (i, j) {
            (0, 0) => t.clone(),
            (0, 1) => QfElem::one(),
            (1, 0) => &t * &t,
            _ => t.clone(),
        });
        assert_eq!(singular.rank(), 1);
        assert_eq!(QfMat::identity(4).rank(), 4);
        assert_eq!(QfMat::zero(3, 5).rank(), 0);
    }

    #[test]
    fn gram_schmidt_orthogonalizes() {
        let one = QfElem::one();
        let t = QfElem::tau();
        let vs = vec![
            vec![one.clone(), t.clone(), QfElem::zero()],
            vec![t.clone(), one.clone(), one.clone()],
            vec![QfElem::zero(), one.clone(), t.clone()],
        ];
        let basis = gram_schmidt(&vs);
        assert_eq!(basis.len(), 3);
        for i in 0..3 {
            for j in i + 1..3 {
                assert!(dot(&basis[i], &basis[j]).is_zero());
            }
        }
    }

    #[test]
    fn block_extraction() {
        let m = QfMat::from_fn(4, 4, |i, j| QfElem::from_int((i * 4 + j) as i64));
        let b = m.block(1, 3, 2, 4);
        assert_eq!(b[(0, 0)], QfElem::from_int(6));
        assert_eq!(b[(1, 1)], QfElem::from_int(11));
    }
}
