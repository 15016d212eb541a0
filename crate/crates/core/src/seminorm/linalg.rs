//! Small exact helpers for rational vectors.

use num::Zero;

use crate::puiseux::{rank_rational, Matrix};
use crate::valuation::Rational;

pub fn span_rank(vectors: &[Vec<Rational>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    rank_rational(&Matrix::from_columns(vectors).expect("vectors of equal length"))
}

pub fn same_span(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> bool {
    let ra = span_rank(a);
    let rb = span_rank(b);
    let joint: Vec<Vec<Rational>> = a.iter().chain(b).cloned().collect();
    ra == rb && span_rank(&joint) == ra
}

/// Solves `Σ x_k columns[k] = target` for linearly independent columns,
/// returning `None` if the target lies outside their span.
pub fn solve(columns: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let n = target.len();
    let k = columns.len();
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|r| {
            let mut row: Vec<Rational> = columns.iter().map(|c| c[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..k {
        let Some(p) = (row..n).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(p, row);
        let pivot = a[row][col].clone();
        for c in col..=k {
            a[row][c] /= &pivot;
        }
        for r in 0..n {
            if r != row && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in col..=k {
                    let d = &factor * &a[row][c];
                    a[r][c] -= d;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if a[row..].iter().any(|r| !r[k].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); k];
    for (i, &col) in pivots.iter().enumerate() {
        x[col] = a[i][k].clone();
    }
    Some(x)
}

pub fn unit(n: usize, i: usize) -> Vec<Rational> {
    (0..n)
        .map(|j| if i == j { Rational::from_integer(1.into()) } else { Rational::zero() })
        .collect()
}
