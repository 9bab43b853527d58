//! Dense exact linear algebra over arbitrary-precision rationals.
//!
//! Every dimension, kernel and containment test in the crate bottoms out
//! here. Pivoting is deterministic: the first nonzero entry in column order.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Returns the value as an `i64` when it is an integer that fits.
pub fn to_i64(q: &Rational) -> Option<i64> {
    if !q.is_integer() {
        return None;
    }
    i64::try_from(q.numer()).ok()
}

pub fn zero_vec(n: usize) -> Vec<Rational> {
    vec![Rational::zero(); n]
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix from integer rows. Panics on ragged input.
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().map(|&x| rat(x)));
        }
        Self {
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn from_rows(rows: &[Vec<Rational>], cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            data.extend(row.iter().cloned());
        }
        Self {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn from_columns(columns: &[Vec<Rational>], rows: usize) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "ragged columns");
            for (i, x) in col.iter().enumerate() {
                if !x.is_zero() {
                    m[(i, j)] = x.clone();
                }
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

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = &self[(i, j)];
                if !x.is_zero() {
                    t[(j, i)] = x.clone();
                }
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = zero_vec(self.rows);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = &self[(i, j)];
                if !a.is_zero() {
                    *o += a * x;
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| f(a, b))
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "vstack of {} and {} columns",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Self {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m[(a, b)] = self[(i, j)].clone();
            }
        }
        m
    }

    /// Reduced row-echelon form and the strictly increasing pivot columns.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    self.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = self[(r, c)].recip();
            for j in c..cols {
                let x = &mut self.data[r * cols + j];
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
            let pivot_row: Vec<(usize, Rational)> = (c..cols)
                .filter(|&j| !self[(r, j)].is_zero())
                .map(|j| (j, self[(r, j)].clone()))
                .collect();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let f = self[(i, c)].clone();
                if f.is_zero() {
                    continue;
                }
                for (j, x) in &pivot_row {
                    self.data[i * cols + j] -= &f * x;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{v : self * v = 0}`.
    pub fn kernel_basis(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let cols = self.cols;
        let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
        let vectors: Vec<Vec<Rational>> = free
            .iter()
            .map(|&f| {
                let mut v = zero_vec(cols);
                v[f] = Rational::one();
                for (row, &p) in pivots.iter().enumerate() {
                    let x = &r[(row, f)];
                    if !x.is_zero() {
                        v[p] = -x.clone();
                    }
                }
                v
            })
            .collect();
        Subspace::span(cols, &vectors)
    }

    /// One solution of `self * v = b`, or `None` when the system is inconsistent.
    pub fn solve_linear(&self, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "{} rows against right-hand side of length {}",
                self.rows,
                b.len()
            )));
        }
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = zero_vec(self.cols);
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = aug[(row, self.cols)].clone();
        }
        Ok(Some(x))
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rational::one();
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)].clone();
            }
        }
        Some(inv)
    }
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// A linear subspace of `Q^ambient_dim`, stored as RREF basis rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim)
            .map(|i| {
                let mut v = zero_vec(ambient_dim);
                v[i] = Rational::one();
                v
            })
            .collect();
        Self {
            ambient_dim,
            basis,
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn span(ambient_dim: usize, vectors: &[Vec<Rational>]) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient_dim);
        }
        let (r, pivots) = RatMatrix::from_rows(vectors, ambient_dim).rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Self {
            ambient_dim,
            basis,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// Coordinates of `v` in the RREF basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Rational]) -> Result<Option<Vec<Rational>>> {
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in ambient dimension {}",
                v.len(),
                self.ambient_dim
            )));
        }
        let coords: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (c, row) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (r, x) in residual.iter_mut().zip(row) {
                if !x.is_zero() {
                    *r -= c * x;
                }
            }
        }
        Ok(is_zero_vec(&residual).then_some(coords))
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        Ok(self.coordinates(v)?.is_some())
    }

    /// Sum of two subspaces of the same ambient space.
    pub fn join(&self, other: &Self) -> Result<Self> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch("subspace join".into()));
        }
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Ok(Self::span(self.ambient_dim, &all))
    }
}

/// Convenience: `true` when `v` is a scalar multiple of `x` (with `x != 0`).
pub fn is_multiple_of(v: &[Rational], x: &[Rational]) -> bool {
    let Some(p) = x.iter().position(|c| !c.is_zero()) else {
        return is_zero_vec(v);
    };
    let s = &v[p] / &x[p];
    v.iter().zip(x).all(|(a, b)| *a == &s * b)
}

pub fn max_abs(v: &[Rational]) -> Rational {
    v.iter()
        .map(Signed::abs)
        .fold(Rational::zero(), |a, b| if b > a { b } else { a })
}
