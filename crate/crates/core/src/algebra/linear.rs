//! Exact Gaussian elimination over the rationals.

use num_traits::{One, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Linear equations `row · x = rhs` in named unknowns.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearSystem {
    unknowns: Vec<String>,
    rows: Vec<(Vec<Rational>, Rational)>,
}

/// Outcome of [`solve_exact`].
#[derive(Clone, Debug, PartialEq)]
pub enum Solution {
    Unique(Vec<Rational>),
    /// Affine solution space `particular + span(directions)`.
    Underdetermined {
        rank: usize,
        free: Vec<String>,
        particular: Vec<Rational>,
        directions: Vec<Vec<Rational>>,
    },
    Inconsistent {
        rank: usize,
    },
}

impl LinearSystem {
    pub fn new(unknowns: Vec<String>) -> Self {
        LinearSystem {
            unknowns,
            rows: Vec::new(),
        }
    }

    pub fn unknowns(&self) -> &[String] {
        &self.unknowns
    }

    pub fn rows(&self) -> &[(Vec<Rational>, Rational)] {
        &self.rows
    }

    pub fn push(&mut self, coeffs: Vec<Rational>, rhs: Rational) -> Result<()> {
        if coeffs.len() != self.unknowns.len() {
            return Err(Error::InvalidInput(format!(
                "row has {} coefficients for {} unknowns",
                coeffs.len(),
                self.unknowns.len()
            )));
        }
        self.rows.push((coeffs, rhs));
        Ok(())
    }
}

/// Reduced row echelon form of `m` in place; returns pivot columns.
fn rref(m: &mut [Vec<Rational>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn solve_exact(sys: &LinearSystem) -> Solution {
    let n = sys.unknowns.len();
    let mut m: Vec<Vec<Rational>> = sys
        .rows
        .iter()
        .map(|(c, b)| {
            let mut row = c.clone();
            row.push(b.clone());
            row
        })
        .collect();
    let pivots = rref(&mut m, n);
    let rank = pivots.len();
    if m.iter().skip(rank).any(|row| !row[n].is_zero()) {
        return Solution::Inconsistent { rank };
    }
    let mut particular = vec![Rational::zero(); n];
    for (i, &c) in pivots.iter().enumerate() {
        particular[c] = m[i][n].clone();
    }
    if rank == n {
        return Solution::Unique(particular);
    }
    let free_cols: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let directions = free_cols
        .iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); n];
            v[f] = Rational::one();
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = -m[i][f].clone();
            }
            v
        })
        .collect();
    Solution::Underdetermined {
        rank,
        free: free_cols.iter().map(|&c| sys.unknowns[c].clone()).collect(),
        particular,
        directions,
    }
}

/// Basis of `{x : m x = 0}`.
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = -m[i][f].clone();
            }
            v
        })
        .collect()
}
