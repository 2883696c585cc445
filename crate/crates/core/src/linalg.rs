//! Exact Gaussian elimination over arbitrary-precision rationals.
//!
//! All routines work on dense `Vec<Vec<Rational>>` matrices. Sizes here are
//! desk scale (tens of rows and columns), so simplicity wins over asymptotics.

use crate::algebra::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Matrix = Vec<Vec<Rational>>;

/// Reduced row echelon form in place. Returns the pivot column indices.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let cols = m.first().map_or(0, Vec::len);
    rref_columns(m, cols)
}

/// RREF restricted to the first `col_limit` columns (row operations still
/// apply to the whole rows). Returns the pivot column indices.
pub fn rref_columns(m: &mut Matrix, col_limit: usize) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..col_limit.min(cols) {
        if r >= rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = &*x / &inv;
        }
        let pivot_row = m[r].clone();
        for (i, work_row) in m.iter_mut().enumerate() {
            if i != r && !work_row[c].is_zero() {
                let f = work_row[c].clone();
                for (x, p) in work_row.iter_mut().zip(&pivot_row) {
                    let sub = p * &f;
                    *x = &*x - &sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut copy = m.clone();
    rref(&mut copy).len()
}

/// Canonical form of a consistent affine system given as augmented rows
/// `[a_1 .. a_d | b]`: the RREF with zero rows dropped. Returns `None` if the
/// system is inconsistent (a row reduces to `0 = nonzero`).
pub fn canonical_affine_system(mut rows: Matrix) -> Option<Matrix> {
    if rows.is_empty() {
        return Some(Vec::new());
    }
    let width = rows[0].len();
    let pivots = rref(&mut rows);
    if pivots.last() == Some(&(width - 1)) {
        return None; // pivot in the rhs column: inconsistent
    }
    rows.truncate(pivots.len());
    Some(rows)
}

/// Particular solution of the augmented system `[A | b]` with all free
/// variables set to zero. `None` if inconsistent.
pub fn particular_solution(aug: &Matrix) -> Option<Vec<Rational>> {
    let mut rows = aug.clone();
    if rows.is_empty() {
        return Some(Vec::new());
    }
    let width = rows[0].len();
    let pivots = rref(&mut rows);
    if pivots.last() == Some(&(width - 1)) {
        return None;
    }
    let mut x = vec![Rational::zero(); width - 1];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = rows[r][width - 1].clone();
    }
    Some(x)
}

/// Basis of the nullspace of `a` (with `cols` columns; `a` may have zero rows).
pub fn nullspace(a: &Matrix, cols: usize) -> Vec<Vec<Rational>> {
    let mut rows = a.clone();
    let pivots = rref(&mut rows);
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -rows[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Repeated exact solves of `A x = rhs` for a fixed full-column-rank `A`
/// given by its columns. Precomputes row operations once.
pub struct ColumnSolver {
    /// ops * A = [I_c; 0]
    ops: Matrix,
    ncols: usize,
    nrows: usize,
}

impl ColumnSolver {
    /// Panics if the columns are linearly dependent.
    pub fn new(columns: &[Vec<Rational>]) -> Self {
        let ncols = columns.len();
        let nrows = if ncols == 0 { 0 } else { columns[0].len() };
        // [A | I] row-reduced; the A block must come out as [I_c; 0].
        let mut m: Matrix = (0..nrows)
            .map(|r| {
                let mut row: Vec<Rational> = columns.iter().map(|col| col[r].clone()).collect();
                for i in 0..nrows {
                    row.push(if i == r { Rational::one() } else { Rational::zero() });
                }
                row
            })
            .collect();
        let pivots = rref_columns(&mut m, ncols);
        assert!(
            pivots.len() == ncols && pivots.iter().enumerate().all(|(i, &p)| p == i),
            "ColumnSolver requires full column rank"
        );
        let ops = m.iter().map(|row| row[ncols..].to_vec()).collect();
        ColumnSolver { ops, ncols, nrows }
    }

    /// Unique solution of `A x = rhs`, or `None` if inconsistent.
    pub fn solve(&self, rhs: &[Rational]) -> Option<Vec<Rational>> {
        debug_assert_eq!(rhs.len(), self.nrows);
        let mut x = Vec::with_capacity(self.ncols);
        for r in 0..self.nrows {
            let mut acc = Rational::zero();
            for (c, v) in rhs.iter().enumerate() {
                if !self.ops[r][c].is_zero() && !v.is_zero() {
                    acc += &self.ops[r][c] * v;
                }
            }
            if r < self.ncols {
                x.push(acc);
            } else if !acc.is_zero() {
                return None;
            }
        }
        Some(x)
    }

    /// The row-operation matrix scaled to integers: returns `(M, D)` with
    /// `M = D * ops` entrywise, `D > 0`.
    pub fn scaled_integer_ops(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let mut denom = BigInt::one();
        for row in &self.ops {
            for x in row {
                denom = denom.lcm(x.denom());
            }
        }
        let m = self
            .ops
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| x.numer() * (&denom / x.denom()))
                    .collect()
            })
            .collect();
        (m, denom)
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }
}

/// Clear denominators and divide by the content, preserving orientation:
/// returns the unique positive multiple of `(coeffs, rhs)` with coprime
/// integer entries.
pub fn primitive_integer_row(coeffs: &[Rational], rhs: &Rational) -> (Vec<BigInt>, BigInt) {
    let mut denom_lcm = rhs.denom().clone();
    for c in coeffs {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let mut ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| c.numer() * (&denom_lcm / c.denom()))
        .collect();
    let mut rhs_int = rhs.numer() * (&denom_lcm / rhs.denom());
    let mut content = rhs_int.abs();
    for v in &ints {
        content = content.gcd(v);
    }
    if !content.is_zero() && !content.is_one() {
        for v in ints.iter_mut() {
            *v = &*v / &content;
        }
        rhs_int = &rhs_int / &content;
    }
    (ints, rhs_int)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|&x| rat(x, 1)).collect())
            .collect()
    }

    #[test]
    fn rref_identity_like() {
        let mut a = m(&[&[2, 0, 4], &[0, 3, 6]]);
        let pivots = rref(&mut a);
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(a[0], vec![rat(1, 1), rat(0, 1), rat(2, 1)]);
        assert_eq!(a[1], vec![rat(0, 1), rat(1, 1), rat(2, 1)]);
    }

    #[test]
    fn inconsistent_system_detected() {
        let sys = m(&[&[1, 1, 0], &[1, 1, 1]]);
        assert!(canonical_affine_system(sys).is_none());
    }

    #[test]
    fn nullspace_of_plane_normal() {
        let a = m(&[&[1, 1, 1]]);
        let basis = nullspace(&a, 3);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            let s: Rational = v.iter().sum();
            assert!(s.is_zero());
        }
    }

    #[test]
    fn column_solver_roundtrip() {
        let cols = vec![
            vec![rat(1, 1), rat(0, 1), rat(1, 1)],
            vec![rat(1, 1), rat(1, 1), rat(0, 1)],
        ];
        let solver = ColumnSolver::new(&cols);
        let rhs = vec![rat(3, 1), rat(2, 1), rat(1, 1)];
        let x = solver.solve(&rhs).unwrap();
        assert_eq!(x, vec![rat(1, 1), rat(2, 1)]);
        let bad = vec![rat(1, 1), rat(0, 1), rat(0, 1)];
        assert!(solver.solve(&bad).is_none());
    }

    #[test]
    fn primitive_scaling() {
        let (c, r) = primitive_integer_row(&[rat(1, 2), rat(-3, 4)], &rat(5, 2));
        assert_eq!(c, vec![BigInt::from(2), BigInt::from(-3)]);
        assert_eq!(r, BigInt::from(10));
    }
}
