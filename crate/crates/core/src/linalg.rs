//! Exact linear algebra over `Q`: the left-regular representation of an
//! algebra element and the elimination-based inverse oracle.

use std::ops::Mul;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::algebra::AlgebraElement;
use crate::exec::Exec;
use crate::groups::FiniteGroup;
use crate::rational::Rational;

/// Row updates fan out only above this many rows.
const PARALLEL_MIN_ROWS: usize = 48;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<Rational>>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![vec![Rational::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = Rational::one();
        }
        m
    }

    pub fn from_rows(data: Vec<Vec<Rational>>) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        assert!(data.iter().all(|r| r.len() == cols), "ragged matrix");
        Matrix { rows, cols, data }
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[Vec<Rational>]) -> Self {
        let cols = columns.len();
        let rows = columns.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows, cols);
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "ragged columns");
            for (i, v) in col.iter().enumerate() {
                m.data[i][j] = v.clone();
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
        &self.data[i][j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i]
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        self.data
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.rank_with(Exec::default())
    }

    pub fn rank_with(&self, exec: Exec) -> usize {
        let mut work = integer_rows(&self.data, None);
        eliminate(&mut work, self.cols, exec).len()
    }

    /// Determinant by fraction-free (Bareiss) elimination on the integer
    /// matrix obtained by clearing each row's denominators.
    ///
    /// This route shares no code with [`solve`](Self::solve), so it can serve
    /// as an independent singularity check.
    pub fn determinant(&self) -> Rational {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Rational::one();
        }
        let mut scale = BigInt::one();
        let mut m: Vec<Vec<BigInt>> = self
            .data
            .iter()
            .map(|row| {
                let lcm = row
                    .iter()
                    .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
                scale *= &lcm;
                row.iter()
                    .map(|v| v.numer() * (&lcm / v.denom()))
                    .collect()
            })
            .collect();

        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(k, i);
                        sign = -sign;
                    }
                    None => return Rational::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = v / &prev;
                }
            }
            prev = m[k][k].clone();
        }
        Rational::new(sign * &m[n - 1][n - 1], scale)
    }

    /// One solution of `self · v = rhs`, or `None` when the system is
    /// inconsistent. Free variables are set to zero.
    pub fn solve(&self, rhs: &[Rational]) -> Option<Vec<Rational>> {
        self.solve_with(rhs, Exec::default())
    }

    pub fn solve_with(&self, rhs: &[Rational], exec: Exec) -> Option<Vec<Rational>> {
        assert_eq!(rhs.len(), self.rows);
        let mut work = integer_rows(&self.data, Some(rhs));
        let pivots = eliminate(&mut work, self.cols, exec);
        // a pivot-free row with a non-zero right-hand side is inconsistent
        if work[pivots.len()..]
            .iter()
            .any(|row| !row[self.cols].is_zero())
        {
            return None;
        }
        let mut solution = vec![Rational::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            solution[c] = Rational::new(work[r][self.cols].clone(), work[r][c].clone());
        }
        Some(solution)
    }

    /// The unique solution of a square system, or `None` if singular.
    pub fn solve_unique(&self, rhs: &[Rational], exec: Exec) -> Option<Vec<Rational>> {
        assert_eq!(self.rows, self.cols, "unique solve needs a square matrix");
        let mut work = integer_rows(&self.data, Some(rhs));
        let pivots = eliminate(&mut work, self.cols, exec);
        if pivots.len() < self.cols {
            return None;
        }
        Some(
            work.into_iter()
                .enumerate()
                .map(|(r, mut row)| {
                    let b = row.pop().unwrap();
                    Rational::new(b, row.swap_remove(r))
                })
                .collect(),
        )
    }
}

/// Clears denominators row by row, appending `rhs` as a final column.
fn integer_rows(data: &[Vec<Rational>], rhs: Option<&[Rational]>) -> Vec<Vec<BigInt>> {
    data.iter()
        .enumerate()
        .map(|(i, row)| {
            let extra = rhs.map(|b| &b[i]);
            let lcm = row
                .iter()
                .chain(extra)
                .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            row.iter()
                .chain(extra)
                .map(|v| v.numer() * (&lcm / v.denom()))
                .collect()
        })
        .collect()
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs.data[k][j];
                    if !b.is_zero() {
                        out.data[i][j] += a * b;
                    }
                }
            }
        }
        out
    }
}

/// Fraction-free Gauss-Jordan elimination over the first `cols` columns
/// (trailing columns are carried along). Afterwards each pivot row has a
/// single non-zero entry among the pivot columns. Returns the pivot columns.
fn eliminate(rows: &mut [Vec<BigInt>], cols: usize, exec: Exec) -> Vec<usize> {
    let exec = if rows.len() >= PARALLEL_MIN_ROWS {
        exec
    } else {
        Exec::Sequential
    };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        // smallest pivot keeps the cross-multiplied entries short
        let Some(p) = (r..rows.len())
            .filter(|&i| !rows[i][c].is_zero())
            .min_by_key(|&i| rows[i][c].bits())
        else {
            continue;
        };
        rows.swap(r, p);
        remove_content(&mut rows[r]);
        let pivot_row = rows[r].clone();
        let pivot = &pivot_row[c];
        exec.for_each_mut(rows, |i, row| {
            if i == r || row[c].is_zero() {
                return;
            }
            let g = pivot.gcd(&row[c]);
            let keep = pivot / &g;
            let take = &row[c] / &g;
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if p.is_zero() {
                    if !v.is_zero() {
                        *v *= &keep;
                    }
                } else {
                    *v = &*v * &keep - &take * p;
                }
            }
            remove_content(row);
        });
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn remove_content(row: &mut [BigInt]) {
    let content = row.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if !content.is_zero() && !content.is_one() {
        for v in row.iter_mut() {
            *v /= &content;
        }
    }
}

/// The matrix of left multiplication by `a` in the group-element basis:
/// column `g` holds the coefficients of `a·g`, so `M(a)M(b) = M(ab)`.
pub fn regular_representation(a: &AlgebraElement) -> Matrix {
    let group = a.group();
    let n = group.order();
    let mut m = Matrix::zeros(n, n);
    for g in 0..n {
        for (k, c) in a.terms() {
            m.data[group.mul(k, g)][g] = c.clone();
        }
    }
    m
}

/// The two-sided inverse of `a`, or `None` when `a` is a zero divisor.
///
/// Solves `M(a)·v = e_1` exactly; in a finite-dimensional algebra a right
/// inverse is automatically two-sided.
pub fn oracle_inverse(a: &AlgebraElement) -> Option<AlgebraElement> {
    oracle_inverse_with(a, Exec::default())
}

pub fn oracle_inverse_with(a: &AlgebraElement, exec: Exec) -> Option<AlgebraElement> {
    let group: &Arc<FiniteGroup> = a.group();
    let mut rhs = vec![Rational::zero(); group.order()];
    rhs[group.identity()] = Rational::one();
    let v = regular_representation(a).solve_unique(&rhs, exec)?;
    let inverse = AlgebraElement::from_dense(group, v);
    debug_assert!((a * &inverse).is_one() && (&inverse * a).is_one());
    Some(inverse)
}
