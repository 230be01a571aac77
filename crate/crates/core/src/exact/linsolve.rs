//! Exact solving of `A·x = b` with rational `A` and right-hand sides in any
//! rational vector space (rationals, polynomials).

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::Poly;
use crate::error::{Error, Result};

/// Right-hand-side values: a vector space over the rationals.
pub trait RhsValue: Clone {
    fn zero_like(&self) -> Self;
    /// `self += c · other`
    fn add_scaled(&mut self, c: &BigRational, other: &Self);
    fn vanishes(&self) -> bool;
}

impl RhsValue for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn add_scaled(&mut self, c: &BigRational, other: &Self) {
        *self += c * other;
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl RhsValue for Poly {
    fn zero_like(&self) -> Self {
        Poly::zero(self.registry())
    }
    fn add_scaled(&mut self, c: &BigRational, other: &Self) {
        Poly::add_scaled(self, c, other);
    }
    fn vanishes(&self) -> bool {
        Poly::is_zero(self)
    }
}

/// Dense row-major rational matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![BigRational::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::SizeMismatch("ragged matrix rows".into()));
        }
        let n = rows.len();
        Ok(Matrix { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigRational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// `A·x` for a vector of right-hand-side values.
    pub fn apply<T: RhsValue>(&self, x: &[T], zero: &T) -> Vec<T> {
        (0..self.rows)
            .map(|r| {
                let mut acc = zero.zero_like();
                for (c, xc) in x.iter().enumerate() {
                    let a = self.get(r, c);
                    if !a.is_zero() {
                        acc.add_scaled(a, xc);
                    }
                }
                acc
            })
            .collect()
    }
}

/// Result of an exact solve.
#[derive(Debug, Clone)]
pub struct Solution<T> {
    pub x: Vec<T>,
    /// Rows used to determine `x`.
    pub pivot_rows: Vec<usize>,
    /// Rows not used for the solve; each was checked to vanish.
    pub residual_rows: Vec<usize>,
}

/// Pivot selection and inverse of the selected square subsystem, reusable
/// across right-hand sides.
#[derive(Debug, Clone)]
pub struct ExactSolver {
    a: Matrix,
    pivot_rows: Vec<usize>,
    residual_rows: Vec<usize>,
    inverse: Matrix,
}

impl ExactSolver {
    /// Select `cols` independent rows (first-found, in row order) and invert
    /// them. Fails with [`Error::Singular`] when `A` lacks full column rank.
    pub fn new(a: Matrix) -> Result<Self> {
        let cols = a.cols;
        if cols == 0 {
            return Err(Error::SizeMismatch("matrix has no columns".into()));
        }
        // echelon basis: (pivot column, normalized reduced row)
        let mut basis: Vec<(usize, Vec<BigRational>)> = Vec::new();
        let mut pivot_rows = Vec::new();
        for r in 0..a.rows {
            if basis.len() == cols {
                break;
            }
            let mut v = a.row(r).to_vec();
            for (pc, b) in &basis {
                if v[*pc].is_zero() {
                    continue;
                }
                let f = v[*pc].clone();
                for (vi, bi) in v.iter_mut().zip(b) {
                    if !bi.is_zero() {
                        *vi -= &f * bi;
                    }
                }
            }
            if let Some(pc) = v.iter().position(|x| !x.is_zero()) {
                let inv = v[pc].recip();
                for vi in v.iter_mut() {
                    *vi *= &inv;
                }
                // keep the basis fully reduced at pivot columns
                for (_, b) in basis.iter_mut() {
                    if !b[pc].is_zero() {
                        let f = b[pc].clone();
                        for (bi, vi) in b.iter_mut().zip(&v) {
                            if !vi.is_zero() {
                                *bi -= &f * vi;
                            }
                        }
                    }
                }
                basis.push((pc, v));
                pivot_rows.push(r);
            }
        }
        if basis.len() < cols {
            return Err(Error::Singular { rank: basis.len(), cols });
        }
        let mut sub = Matrix::zeros(cols, cols);
        for (i, &r) in pivot_rows.iter().enumerate() {
            for c in 0..cols {
                sub.set(i, c, a.get(r, c).clone());
            }
        }
        let inverse = invert(&sub)?;
        let residual_rows = (0..a.rows).filter(|r| !pivot_rows.contains(r)).collect();
        Ok(ExactSolver { a, pivot_rows, residual_rows, inverse })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.a
    }

    pub fn pivot_rows(&self) -> &[usize] {
        &self.pivot_rows
    }

    /// Solve for one right-hand side and verify every held-out row.
    pub fn solve<T: RhsValue>(&self, b: &[T]) -> Result<Solution<T>> {
        if b.len() != self.a.rows {
            return Err(Error::SizeMismatch(format!("rhs has {} entries, matrix {} rows", b.len(), self.a.rows)));
        }
        let Some(zero) = b.first().map(RhsValue::zero_like) else {
            return Err(Error::SizeMismatch("empty right-hand side".into()));
        };
        let cols = self.a.cols;
        let x: Vec<T> = (0..cols)
            .map(|j| {
                let mut acc = zero.zero_like();
                for (i, &r) in self.pivot_rows.iter().enumerate() {
                    let c = self.inverse.get(j, i);
                    if !c.is_zero() {
                        acc.add_scaled(c, &b[r]);
                    }
                }
                acc
            })
            .collect();
        for &r in &self.residual_rows {
            let mut acc = b[r].clone();
            for (c, xc) in x.iter().enumerate() {
                let a = self.a.get(r, c);
                if !a.is_zero() {
                    acc.add_scaled(&-a, xc);
                }
            }
            if !acc.vanishes() {
                return Err(Error::Inconsistent { row: r });
            }
        }
        Ok(Solution { x, pivot_rows: self.pivot_rows.clone(), residual_rows: self.residual_rows.clone() })
    }
}

/// Gauss-Jordan inverse of a square rational matrix.
pub fn invert(m: &Matrix) -> Result<Matrix> {
    let n = m.rows;
    if m.cols != n {
        return Err(Error::SizeMismatch("inverse of a non-square matrix".into()));
    }
    let mut a = m.clone();
    let mut inv = Matrix::identity(n);
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a.get(r, col).is_zero()) else {
            return Err(Error::Singular { rank: col, cols: n });
        };
        if p != col {
            for c in 0..n {
                a.data.swap(p * n + c, col * n + c);
                inv.data.swap(p * n + c, col * n + c);
            }
        }
        let piv = a.get(col, col).recip();
        for c in 0..n {
            let v = a.get(col, c) * &piv;
            a.set(col, c, v);
            let w = inv.get(col, c) * &piv;
            inv.set(col, c, w);
        }
        for r in 0..n {
            if r == col || a.get(r, col).is_zero() {
                continue;
            }
            let f = a.get(r, col).clone();
            for c in 0..n {
                let v = a.get(r, c) - &f * a.get(col, c);
                a.set(r, c, v);
                let w = inv.get(r, c) - &f * inv.get(col, c);
                inv.set(r, c, w);
            }
        }
    }
    Ok(inv)
}

/// Solve `A·x = b` exactly; see [`ExactSolver`].
pub fn solve_linear_exact<T: RhsValue>(a: &Matrix, b: &[T]) -> Result<Solution<T>> {
    ExactSolver::new(a.clone())?.solve(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::registry::VariableRegistry;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn identity_returns_rhs() {
        let a = Matrix::identity(3);
        let b = vec![rat(1, 2), rat(-3, 1), rat(0, 1)];
        assert_eq!(solve_linear_exact(&a, &b).unwrap().x, b);
    }

    #[test]
    fn diagonal_with_polynomial_rhs() {
        let reg = VariableRegistry::standard(&[1], &[0]).unwrap();
        let q = Poly::named(&reg, "q").unwrap();
        let big_q = Poly::named(&reg, "Q1").unwrap();
        let a = Matrix::from_i64(&[&[2, 0], &[0, 4]]).unwrap();
        let sol = solve_linear_exact(&a, &[q.clone(), big_q.clone()]).unwrap();
        assert_eq!(sol.x, vec![q.scale(&rat(1, 2)), big_q.scale(&rat(1, 4))]);
    }

    #[test]
    fn rank_one_is_singular() {
        let a = Matrix::from_i64(&[&[1, 1], &[1, 1]]).unwrap();
        let err = solve_linear_exact(&a, &[rat(1, 1), rat(1, 1)]).unwrap_err();
        assert_eq!(err, Error::Singular { rank: 1, cols: 2 });
    }

    #[test]
    fn overdetermined_consistent_and_inconsistent() {
        let a = Matrix::from_i64(&[&[1, 0], &[1, 1], &[0, 1], &[2, 3]]).unwrap();
        let good = [rat(1, 1), rat(3, 1), rat(2, 1), rat(8, 1)];
        let sol = solve_linear_exact(&a, &good).unwrap();
        assert_eq!(sol.x, vec![rat(1, 1), rat(2, 1)]);
        assert_eq!(sol.pivot_rows, vec![0, 1]);
        assert_eq!(sol.residual_rows, vec![2, 3]);
        let bad = [rat(1, 1), rat(3, 1), rat(2, 1), rat(9, 1)];
        assert_eq!(solve_linear_exact(&a, &bad).unwrap_err(), Error::Inconsistent { row: 3 });
    }

    #[test]
    fn skips_dependent_rows_when_choosing_pivots() {
        let a = Matrix::from_i64(&[&[1, 2], &[2, 4], &[0, 1]]).unwrap();
        let sol = solve_linear_exact(&a, &[rat(5, 1), rat(10, 1), rat(2, 1)]).unwrap();
        assert_eq!(sol.pivot_rows, vec![0, 2]);
        assert_eq!(sol.x, vec![rat(1, 1), rat(2, 1)]);
    }
}
