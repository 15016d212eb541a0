use num::{One, Zero};

use crate::error::{Error, Result};
use crate::valuation::Rational;

use super::PuiseuxPoly;

/// Default size bound for determinants of non-constant matrices.
pub const DEFAULT_MAX_DET_SIZE: usize = 12;

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        for r in &rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
        }
        let n = rows.len();
        Matrix::new(n, cols, rows.into_iter().flatten().collect())
    }

    /// Builds a matrix whose `k`-th column is `columns[k]`.
    pub fn from_columns(columns: &[Vec<T>]) -> Result<Self> {
        let height = columns.first().map_or(0, Vec::len);
        for c in columns {
            if c.len() != height {
                return Err(Error::DimensionMismatch {
                    expected: height,
                    found: c.len(),
                });
            }
        }
        let data = (0..height)
            .flat_map(|r| columns.iter().map(move |c| c[r].clone()))
            .collect();
        Matrix::new(height, columns.len(), data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: T) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> Vec<T> {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn column(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<T>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix<T> {
        let data = (0..self.rows)
            .flat_map(|r| idx.iter().map(move |&c| self.get(r, c).clone()))
            .collect();
        Matrix {
            rows: self.rows,
            cols: idx.len(),
            data,
        }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix<T> {
        let data = idx.iter().flat_map(|&r| self.row(r)).collect();
        Matrix {
            rows: idx.len(),
            cols: self.cols,
            data,
        }
    }

    pub fn transpose(&self) -> Matrix<T> {
        let data = (0..self.cols)
            .flat_map(|c| (0..self.rows).map(move |r| self.get(r, c).clone()))
            .collect();
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn map<U, F: Fn(&T) -> U>(&self, f: F) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        let data = (0..n * n)
            .map(|k| if k / n == k % n { T::one() } else { T::zero() })
            .collect();
        Matrix {
            rows: n,
            cols: n,
            data,
        }
    }
}

impl Matrix<PuiseuxPoly> {
    /// The rational matrix of constants, if every entry is trivially valued.
    pub fn as_rational(&self) -> Option<Matrix<Rational>> {
        let data: Option<Vec<Rational>> = self.data.iter().map(PuiseuxPoly::constant_value).collect();
        data.map(|data| Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }
}

impl Matrix<Rational> {
    pub fn to_puiseux(&self) -> Matrix<PuiseuxPoly> {
        self.map(|q| PuiseuxPoly::constant(q.clone()))
    }
}

fn require_square<T>(m: &Matrix<T>) -> Result<usize> {
    if m.rows != m.cols {
        return Err(Error::DimensionMismatch {
            expected: m.rows,
            found: m.cols,
        });
    }
    Ok(m.rows)
}

/// Determinant over `ℚ` by Gaussian elimination.
pub fn det_rational(m: &Matrix<Rational>) -> Result<Rational> {
    let n = require_square(m)?;
    let mut a = m.to_rows();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Ok(Rational::zero());
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let pivot = a[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &pivot;
            for c in col..n {
                let delta = &factor * &a[col][c];
                a[r][c] -= delta;
            }
        }
    }
    Ok(det)
}

/// Rank over `ℚ`.
pub fn rank_rational(m: &Matrix<Rational>) -> usize {
    let mut a = m.to_rows();
    let mut rank = 0;
    for col in 0..m.cols {
        let Some(p) = (rank..m.rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(p, rank);
        let pivot = a[rank][col].clone();
        for r in rank + 1..m.rows {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &pivot;
            for c in col..m.cols {
                let delta = &factor * &a[rank][c];
                a[r][c] -= delta;
            }
        }
        rank += 1;
    }
    rank
}

/// Inverse over `ℚ` by Gauss–Jordan elimination.
pub fn inverse_rational(m: &Matrix<Rational>) -> Result<Matrix<Rational>> {
    let n = require_square(m)?;
    let mut a = m.to_rows();
    let mut inv = Matrix::<Rational>::identity(n).to_rows();
    for col in 0..n {
        let p = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or(Error::SingularBasis)?;
        a.swap(p, col);
        inv.swap(p, col);
        let pivot = a[col][col].clone();
        for c in 0..n {
            a[col][c] /= &pivot;
            inv[col][c] /= &pivot;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for c in 0..n {
                let d1 = &factor * &a[col][c];
                a[r][c] -= d1;
                let d2 = &factor * &inv[col][c];
                inv[r][c] -= d2;
            }
        }
    }
    Matrix::from_rows(inv)
}

/// Exact determinant with the default size bound.
pub fn det(m: &Matrix<PuiseuxPoly>) -> Result<PuiseuxPoly> {
    det_bounded(m, DEFAULT_MAX_DET_SIZE)
}

/// Exact determinant without leaving the ring.
///
/// Constant matrices go through rational elimination. Otherwise the minors
/// of the leading rows are built up over column subsets, expanding each
/// along its last row; no division is performed.
pub fn det_bounded(m: &Matrix<PuiseuxPoly>, bound: usize) -> Result<PuiseuxPoly> {
    let n = require_square(m)?;
    if let Some(q) = m.as_rational() {
        return Ok(PuiseuxPoly::constant(det_rational(&q)?));
    }
    if n > bound {
        return Err(Error::MatrixTooLarge { size: n, bound });
    }
    // minors[mask] = det of rows 0..popcount(mask) restricted to columns in mask.
    let mut minors: Vec<PuiseuxPoly> = vec![PuiseuxPoly::zero(); 1 << n];
    minors[0] = PuiseuxPoly::one();
    let mut by_size: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for mask in 0usize..1 << n {
        by_size[mask.count_ones() as usize].push(mask);
    }
    for k in 1..=n {
        let row = k - 1;
        for &mask in &by_size[k] {
            let mut acc = PuiseuxPoly::zero();
            let mut position = 0;
            for j in 0..n {
                if mask & (1 << j) == 0 {
                    continue;
                }
                let entry = m.get(row, j);
                let sub = &minors[mask & !(1 << j)];
                if !entry.is_zero() && !sub.is_zero() {
                    let term = entry * sub;
                    acc = if (row + position) % 2 == 0 {
                        &acc + &term
                    } else {
                        &acc - &term
                    };
                }
                position += 1;
            }
            minors[mask] = acc;
        }
    }
    Ok(std::mem::take(&mut minors[(1 << n) - 1]))
}

/// Rank over the fraction field, by fraction-free elimination.
pub fn rank(m: &Matrix<PuiseuxPoly>) -> usize {
    if let Some(q) = m.as_rational() {
        return rank_rational(&q);
    }
    let mut a = m.to_rows();
    let mut rank = 0;
    for col in 0..m.cols {
        let Some(p) = (rank..m.rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(p, rank);
        let pivot = a[rank][col].clone();
        for r in rank + 1..m.rows {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for c in col..m.cols {
                a[r][c] = &(&a[r][c] * &pivot) - &(&factor * &a[rank][c]);
            }
        }
        rank += 1;
    }
    rank
}
