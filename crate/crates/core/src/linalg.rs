//! Exact Gaussian elimination over the rationals.

use num_traits::{One, Zero};

use crate::exact::Scalar;

/// Dense matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<Scalar>>,
}

/// Certificate that `A x = b` has no solution: `y A = 0` but `y · b ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inconsistency {
    pub left_null: Vec<Scalar>,
    pub pairing: Scalar,
    pub rank: usize,
    pub augmented_rank: usize,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![vec![Scalar::zero(); cols]; rows] }
    }

    pub fn from_rows(data: Vec<Vec<Scalar>>) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        assert!(data.iter().all(|r| r.len() == cols), "ragged matrix");
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r][c] = v;
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c][r] = self.data[r][c].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.data
            .iter()
            .map(|row| row.iter().zip(x).fold(Scalar::zero(), |acc, (a, b)| acc + a * b))
            .collect()
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.data[i][c].is_zero()) else {
                continue;
            };
            m.data.swap(r, p);
            let inv = Scalar::one() / &m.data[r][c];
            for x in m.data[r].iter_mut() {
                *x *= &inv;
            }
            let pivot_row = m.data[r].clone();
            for i in 0..m.rows {
                if i != r && !m.data[i][c].is_zero() {
                    let f = m.data[i][c].clone();
                    for (x, y) in m.data[i].iter_mut().zip(&pivot_row) {
                        if !y.is_zero() {
                            *x -= &f * y;
                        }
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let (m, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -m.data[r][f].clone();
                }
                v
            })
            .collect()
    }

    /// Exact solve of `A x = b`; a particular solution (free variables zero)
    /// or an inconsistency certificate.
    pub fn solve(&self, b: &[Scalar]) -> Result<Vec<Scalar>, Inconsistency> {
        assert_eq!(b.len(), self.rows);
        let mut aug = self.clone();
        for (row, rhs) in aug.data.iter_mut().zip(b) {
            row.push(rhs.clone());
        }
        aug.cols += 1;
        let (m, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            let rank = pivots.len() - 1;
            // some left-null vector must pair nontrivially with b
            let at = self.transpose();
            let y = at
                .kernel()
                .into_iter()
                .find(|y| !dot(y, b).is_zero())
                .expect("inconsistent system has a separating left-null vector");
            let pairing = dot(&y, b);
            return Err(Inconsistency { left_null: y, pairing, rank, augmented_rank: rank + 1 });
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = m.data[r][self.cols].clone();
        }
        Ok(x)
    }
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).fold(Scalar::zero(), |acc, (x, y)| acc + x * y)
}
