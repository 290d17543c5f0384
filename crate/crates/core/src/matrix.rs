//! Dense matrices over exact rings, plus the linear algebra the rest of the
//! crate leans on: row reduction, rank, kernel and solve over a field;
//! determinant and inverse over `K[t, 1/t]`.

use std::fmt;

use thiserror::Error;

use crate::echelon::Echelon;
use crate::field::{Field, Scalar};
use crate::laurent::LaurentPoly;
use crate::ring::RingElem;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("determinant {det} is not a unit of K[t, 1/t]")]
    NotAUnit { det: String },
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

#[derive(Clone, PartialEq)]
pub struct Matrix<T: RingElem> {
    rows: usize,
    cols: usize,
    ctx: T::Ctx,
    entries: Vec<T>, // row-major
}

impl<T: RingElem> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.row_slices()).finish()
    }
}

impl<T: RingElem> Matrix<T> {
    pub fn zeros(ctx: &T::Ctx, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            ctx: ctx.clone(),
            entries: vec![T::zero(ctx); rows * cols],
        }
    }

    pub fn identity(ctx: &T::Ctx, n: usize) -> Self {
        Self::from_fn(ctx, n, n, |i, j| if i == j { T::one(ctx) } else { T::zero(ctx) })
    }

    pub fn from_fn(ctx: &T::Ctx, rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            ctx: ctx.clone(),
            entries,
        }
    }

    /// Builds from explicit rows. Fails on ragged input.
    pub fn from_rows(ctx: &T::Ctx, rows: Vec<Vec<T>>) -> Result<Self, AlgebraError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(AlgebraError::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            ctx: ctx.clone(),
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn diagonal(ctx: &T::Ctx, diag: Vec<T>) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(ctx, n, n);
        for (i, d) in diag.into_iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ctx(&self) -> &T::Ctx {
        &self.ctx
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_slices(&self) -> impl Iterator<Item = &[T]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.entries.iter()
    }

    pub fn map<U: RingElem>(&self, ctx: &U::Ctx, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            ctx: ctx.clone(),
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.ctx, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(T::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix add shape");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            ctx: self.ctx.clone(),
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            ctx: self.ctx.clone(),
            entries: self.entries.iter().map(T::neg).collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            ctx: self.ctx.clone(),
            entries: self.entries.iter().map(|a| c.mul(a)).collect(),
        }
    }

    /// Panics when the inner dimensions disagree.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = Self::zeros(&self.ctx, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.entries[idx] = out.entries[idx].add(&a.mul(b));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(T::zero(&self.ctx), |acc, (a, b)| acc.add(&a.mul(b)))
            })
            .collect()
    }

    /// Kronecker product; index `(i1 * rows2 + i2, j1 * cols2 + j2)`.
    pub fn kronecker(&self, other: &Self) -> Self {
        Self::from_fn(&self.ctx, self.rows * other.rows, self.cols * other.cols, |i, j| {
            self.get(i / other.rows, j / other.cols)
                .mul(other.get(i % other.rows, j % other.cols))
        })
    }

    /// Block diagonal sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        Self::from_fn(&self.ctx, self.rows + other.rows, self.cols + other.cols, |i, j| {
            match (i < self.rows, j < self.cols) {
                (true, true) => self.get(i, j).clone(),
                (false, false) => other.get(i - self.rows, j - self.cols).clone(),
                _ => T::zero(&self.ctx),
            }
        })
    }

    /// Determinant by cofactor expansion; only for small matrices or rings
    /// without exact division.
    pub fn det_cofactor(&self) -> T {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let idx: Vec<usize> = (0..self.cols).collect();
        self.minor_det(0, &idx)
    }

    fn minor_det(&self, row: usize, cols: &[usize]) -> T {
        if cols.is_empty() {
            return T::one(&self.ctx);
        }
        let mut acc = T::zero(&self.ctx);
        for (k, &c) in cols.iter().enumerate() {
            let a = self.get(row, c);
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = a.mul(&self.minor_det(row + 1, &rest));
            acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }
}

impl<T: RingElem + fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Reduced row echelon form together with the pivot columns.
#[derive(Debug, Clone)]
pub struct RowEchelon {
    pub matrix: Matrix<Scalar>,
    pub pivots: Vec<usize>,
}

impl Matrix<Scalar> {
    pub fn field(&self) -> Field {
        self.ctx
    }

    pub fn from_int_rows(field: Field, rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|x| field.from_i64(*x)).collect())
            .collect();
        Self::from_rows(&field, rows).expect("rectangular literal")
    }

    /// Gauss-Jordan elimination.
    pub fn rref(&self) -> RowEchelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().unwrap();
            for j in c..m.cols {
                let v = m.get(r, j).mul(&inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    if m.get(r, j).is_zero() {
                        continue;
                    }
                    let v = m.get(i, j).sub(&factor.mul(m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        RowEchelon { matrix: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        Echelon::of(self).rank()
    }

    /// Basis of the right null space `{v : M v = 0}`; its length is
    /// `cols - rank`. The vector for free column `f` has a one at `f` and
    /// zeros at the other free columns.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let ech = Echelon::of(self);
        let field = self.ctx;
        let pivots: Vec<usize> = ech.pivot_columns().collect();
        (0..self.cols)
            .filter(|c| !pivots.contains(c))
            .map(|f| ech.back_substitute(self.cols, |j| if j == f { field.one() } else { field.zero() }))
            .collect()
    }

    /// One solution of `M x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "right-hand side length");
        let field = self.ctx;
        let aug = Matrix::from_fn(&field, self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let ech = Echelon::of(&aug);
        if ech.pivot_columns().any(|c| c == self.cols) {
            return None;
        }
        Some(ech.back_substitute(self.cols, |_| field.zero()))
    }

    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        if !self.is_square() {
            return Err(AlgebraError::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let field = self.ctx;
        let aug = Matrix::from_fn(&field, n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                field.one()
            } else {
                field.zero()
            }
        });
        let RowEchelon { matrix, pivots } = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(AlgebraError::Singular);
        }
        Ok(Matrix::from_fn(&field, n, n, |i, j| matrix.get(i, j + n).clone()))
    }

    /// Determinant by elimination.
    pub fn det(&self) -> Scalar {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let mut m = self.clone();
        let mut det = self.ctx.one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                return self.ctx.zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = det.neg();
            }
            let pivot = m.get(c, c).clone();
            det = det.mul(&pivot);
            let inv = pivot.inv().unwrap();
            for i in c + 1..m.rows {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).mul(&inv);
                for j in c..m.cols {
                    let v = m.get(i, j).sub(&factor.mul(m.get(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        det
    }
}

impl Matrix<LaurentPoly> {
    pub fn from_int_terms(field: Field, rows: &[&[&[(i64, i64)]]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|e| LaurentPoly::from_int_terms(field, e)).collect())
            .collect();
        Self::from_rows(&field, rows).expect("rectangular literal")
    }

    pub fn field(&self) -> Field {
        self.ctx
    }

    /// Fraction-free (Bareiss) determinant; every division is exact.
    pub fn det(&self) -> LaurentPoly {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return LaurentPoly::one(self.ctx);
        }
        let mut m = self.clone();
        let mut sign_flip = false;
        let mut prev = LaurentPoly::one(self.ctx);
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m.get(i, k).is_zero()) else {
                    return LaurentPoly::zero(self.ctx);
                };
                for j in 0..n {
                    m.entries.swap(k * n + j, p * n + j);
                }
                sign_flip = !sign_flip;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m.get(i, j).mul(m.get(k, k)).sub(&m.get(i, k).mul(m.get(k, j)));
                    let v = num.div_exact(&prev).expect("Bareiss division is exact");
                    m.set(i, j, v);
                }
            }
            prev = m.get(k, k).clone();
        }
        let d = m.get(n - 1, n - 1).clone();
        if sign_flip {
            d.neg()
        } else {
            d
        }
    }

    /// Inverse via adjugate and determinant. The determinant must be a unit
    /// `c t^k` of `K[t, 1/t]`.
    pub fn laurent_inverse(&self) -> Result<Self, AlgebraError> {
        if !self.is_square() {
            return Err(AlgebraError::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let det = self.det();
        let det_inv = det.inv_unit().ok_or_else(|| AlgebraError::NotAUnit {
            det: det.to_string(),
        })?;
        let n = self.rows;
        let cofactor = |i: usize, j: usize| -> LaurentPoly {
            let minor = Matrix::from_fn(&self.ctx, n - 1, n - 1, |a, b| {
                let r = if a < i { a } else { a + 1 };
                let c = if b < j { b } else { b + 1 };
                self.get(r, c).clone()
            });
            let d = minor.det();
            if (i + j).is_multiple_of(2) {
                d
            } else {
                d.neg()
            }
        };
        // adj(M)_{ij} = cofactor_{ji}
        Ok(Matrix::from_fn(&self.ctx, n, n, |i, j| cofactor(j, i).mul(&det_inv)))
    }

    /// Smallest and largest exponent over all entries, `None` if all zero.
    pub fn exponent_range(&self) -> Option<(i64, i64)> {
        let lo = self.entries.iter().filter_map(LaurentPoly::min_exp).min()?;
        let hi = self.entries.iter().filter_map(LaurentPoly::max_exp).max()?;
        Some((lo, hi))
    }

    pub fn derivative(&self) -> Self {
        self.map(&self.ctx, LaurentPoly::derivative)
    }

    pub fn shift(&self, k: i64) -> Self {
        self.map(&self.ctx, |p| p.shift(k))
    }

    pub fn invert_variable(&self) -> Self {
        self.map(&self.ctx, LaurentPoly::invert_variable)
    }
}
