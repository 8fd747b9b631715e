//! Dense matrices over exact rationals.
//!
//! Rank, kernel, and solving all run through fraction-free (Bareiss-style)
//! elimination: rows are first cleared to integers, and every elimination
//! step divides exactly by the previous pivot, so intermediate entries stay
//! at minor-determinant size instead of blowing up. There is no pivoting
//! heuristic beyond "first nonzero", no tolerance, and no floating point.

use num::bigint::BigInt;
use num::traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{denominator_lcm, rat, Rational};

#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl std::fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl ExactMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, got: entries.len() });
        }
        Ok(ExactMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        ExactMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    /// Convenience builder for integer test data.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        ExactMatrix::from_rows(rows.iter().map(|r| r.iter().copied().map(rat).collect()).collect())
    }

    pub fn from_columns(cols: &[Vec<Rational>]) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        let mut m = ExactMatrix::zero(r, c);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), r, "ragged columns");
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

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn row(&self, r: usize) -> Vec<Rational> {
        (0..self.cols).map(|c| self.get(r, c).clone()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut out = ExactMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        ExactMatrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        ExactMatrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        let entries = self.entries.iter().map(|a| a * factor).collect();
        ExactMatrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = ExactMatrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let v = out.get(r, c) + a * b;
                        out.set(r, c, v);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "shape mismatch");
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c) * &v[c]).sum())
            .collect()
    }

    pub fn pow(&self, mut exp: usize) -> Self {
        assert!(self.is_square(), "pow needs a square matrix");
        let mut base = self.clone();
        let mut acc = ExactMatrix::identity(self.rows);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn trace(&self) -> Rational {
        assert!(self.is_square(), "trace needs a square matrix");
        (0..self.rows).map(|i| self.get(i, i).clone()).sum()
    }

    /// `trace(self * other)` without forming the product.
    pub fn trace_product(&self, other: &Self) -> Rational {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        assert_eq!(self.rows, other.cols, "shape mismatch");
        let mut acc = Rational::zero();
        for r in 0..self.rows {
            for k in 0..self.cols {
                acc += self.get(r, k) * other.get(k, r);
            }
        }
        acc
    }

    /// Columns of `other` appended to the right of `self`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "shape mismatch");
        let mut out = ExactMatrix::zero(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        out
    }

    /// Rows of `other` appended below `self`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "shape mismatch");
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        ExactMatrix { rows: self.rows + other.rows, cols: self.cols, entries }
    }

    /// Rank over Q via fraction-free elimination. Exact, no tolerance.
    pub fn rank(&self) -> usize {
        self.echelon().pivot_cols.len()
    }

    /// Basis of the right kernel `{v : self * v = 0}`.
    ///
    /// The basis has exactly `cols - rank` vectors; each free column
    /// contributes the vector with a one in that coordinate.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let ech = self.echelon();
        let pivot_set: Vec<Option<usize>> = {
            let mut map = vec![None; self.cols];
            for (row_idx, &col) in ech.pivot_cols.iter().enumerate() {
                map[col] = Some(row_idx);
            }
            map
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            // Back-substitute pivot coordinates from the bottom row up.
            for (row_idx, &pcol) in ech.pivot_cols.iter().enumerate().rev() {
                let mut acc = Rational::zero();
                for c in pcol + 1..self.cols {
                    let coeff = &ech.mat[row_idx][c];
                    if !coeff.is_zero() && !v[c].is_zero() {
                        acc += Rational::from_integer(coeff.clone()) * &v[c];
                    }
                }
                v[pcol] = -acc / Rational::from_integer(ech.mat[row_idx][pcol].clone());
            }
            debug_assert!(self.mul_vec(&v).iter().all(Rational::is_zero));
            basis.push(v);
        }
        basis
    }

    /// Solve `self * x = b` exactly.
    ///
    /// Returns `None` when `b` is outside the column span; otherwise a
    /// particular solution (free coordinates set to zero) together with a
    /// kernel basis spanning the solution fiber.
    pub fn solve_affine(&self, b: &[Rational]) -> Option<(Vec<Rational>, Vec<Vec<Rational>>)> {
        assert_eq!(self.rows, b.len(), "shape mismatch");
        let aug = self.hstack(&ExactMatrix::from_columns(&[b.to_vec()]));
        // Restrict pivoting to the coefficient columns: a pivot appearing in
        // the augmented column means the system is inconsistent.
        let ech = aug.echelon_bounded(self.cols);
        for row in &ech.mat[ech.pivot_cols.len()..] {
            if !row[self.cols].is_zero() {
                return None;
            }
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (row_idx, &pcol) in ech.pivot_cols.iter().enumerate().rev() {
            let mut acc = Rational::from_integer(ech.mat[row_idx][self.cols].clone());
            for c in pcol + 1..self.cols {
                let coeff = &ech.mat[row_idx][c];
                if !coeff.is_zero() && !x[c].is_zero() {
                    acc -= Rational::from_integer(coeff.clone()) * &x[c];
                }
            }
            x[pcol] = acc / Rational::from_integer(ech.mat[row_idx][pcol].clone());
        }
        debug_assert_eq!(self.mul_vec(&x), b.to_vec());
        Some((x, self.nullspace()))
    }

    /// Exact inverse; `None` for singular or non-square input.
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut cols = Vec::with_capacity(n);
        // One echelon pass would do, but n stays small throughout this crate.
        for j in 0..n {
            let mut e = vec![Rational::zero(); n];
            e[j] = Rational::one();
            let (x, _) = self.solve_affine(&e)?;
            cols.push(x);
        }
        if self.rank() < n {
            return None;
        }
        Some(ExactMatrix::from_columns(&cols))
    }

    fn echelon(&self) -> Echelon {
        self.echelon_bounded(self.cols)
    }

    /// Fraction-free row echelon form, pivoting only in the first
    /// `pivot_limit` columns. Rows are cleared to integers first; the
    /// Bareiss step divides exactly by the previous pivot.
    fn echelon_bounded(&self, pivot_limit: usize) -> Echelon {
        let mut mat: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let lcm = denominator_lcm(&row);
                row.iter()
                    .map(|v| v.numer() * (&lcm / v.denom()))
                    .collect()
            })
            .collect();
        let mut pivot_cols = Vec::new();
        let mut pivot_row = 0usize;
        let mut prev_pivot = BigInt::one();
        for col in 0..pivot_limit {
            if pivot_row == self.rows {
                break;
            }
            let Some(found) = (pivot_row..self.rows).find(|&r| !mat[r][col].is_zero()) else {
                continue;
            };
            mat.swap(pivot_row, found);
            let pivot = mat[pivot_row][col].clone();
            for r in pivot_row + 1..self.rows {
                if mat[r].iter().all(Zero::is_zero) {
                    continue;
                }
                let factor = mat[r][col].clone();
                for c in 0..mat[r].len() {
                    let v = (&pivot * &mat[r][c] - &factor * &mat[pivot_row][c]) / &prev_pivot;
                    mat[r][c] = v;
                }
            }
            prev_pivot = pivot;
            pivot_cols.push(col);
            pivot_row += 1;
        }
        Echelon { mat, pivot_cols }
    }
}

struct Echelon {
    mat: Vec<Vec<BigInt>>,
    pivot_cols: Vec<usize>,
}

/// Dot product of two rational vectors.
pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    assert_eq!(a.len(), b.len(), "shape mismatch");
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn vec_add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(factor: &Rational, a: &[Rational]) -> Vec<Rational> {
    a.iter().map(|x| x * factor).collect()
}

pub fn vec_is_zero(a: &[Rational]) -> bool {
    a.iter().all(Rational::is_zero)
}
