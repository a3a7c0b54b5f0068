//! Small dense square matrices over any exact [`Ring`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::algebra::{ComplexRational, MultiPoly, Ring};

/// Row-major `n x n` matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    n: usize,
    data: Vec<T>,
}

/// Exact numeric matrix.
pub type CMatrix = Matrix<ComplexRational>;

impl<T: Ring> Matrix<T> {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![T::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self { n, data }
    }

    /// Builds from nested rows; `None` unless the rows form a square.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Option<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return None;
        }
        Some(Self { n, data: rows.into_iter().flatten().collect() })
    }

    pub fn diagonal(entries: Vec<T>) -> Self {
        let n = entries.len();
        let mut out = Self::zeros(n);
        for (i, e) in entries.into_iter().enumerate() {
            out.set(i, i, e);
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Zero-based entry `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.data[i * self.n + j] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks(self.n.max(1))
    }

    pub fn map<U: Ring>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { n: self.n, data: self.data.iter().map(f).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    pub fn scale(&self, k: &T) -> Self {
        self.map(|x| x.clone() * k.clone())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> T {
        (0..self.n).fold(T::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    /// `self * other + other * self`.
    pub fn anticommutator(&self, other: &Self) -> Self {
        &(self * other) + &(other * self)
    }

    /// Laplace expansion along the first row. Exponential in `n`; meant
    /// for the small sizes used here and as an independent oracle.
    pub fn det_cofactor(&self) -> T {
        match self.n {
            0 => T::one(),
            1 => self.get(0, 0).clone(),
            _ => {
                let mut acc = T::zero();
                for j in 0..self.n {
                    let a = self.get(0, j);
                    if a.is_zero() {
                        continue;
                    }
                    let term = a.clone() * self.minor(0, j).det_cofactor();
                    acc = if j % 2 == 0 { acc + term } else { acc - term };
                }
                acc
            }
        }
    }

    /// Drops row `r` and column `c`.
    pub fn minor(&self, r: usize, c: usize) -> Self {
        let m = self.n - 1;
        Self::from_fn(m, |i, j| {
            let si = if i < r { i } else { i + 1 };
            let sj = if j < c { j } else { j + 1 };
            self.get(si, sj).clone()
        })
    }
}

impl<'a, T: Ring> Mul<&'a Matrix<T>> for &'a Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        Matrix::from_fn(self.n, |i, j| {
            (0..self.n).fold(T::zero(), |acc, k| {
                let a = self.get(i, k);
                let b = rhs.get(k, j);
                if a.is_zero() || b.is_zero() {
                    acc
                } else {
                    acc + a.clone() * b.clone()
                }
            })
        })
    }
}

impl<'a, T: Ring> Add<&'a Matrix<T>> for &'a Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        Matrix::from_fn(self.n, |i, j| self.get(i, j).clone() + rhs.get(i, j).clone())
    }
}

impl<'a, T: Ring> Sub<&'a Matrix<T>> for &'a Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        Matrix::from_fn(self.n, |i, j| self.get(i, j).clone() - rhs.get(i, j).clone())
    }
}

impl<T: Ring> Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        self.map(|x| -x.clone())
    }
}

/// Entry types with complex conjugation.
pub trait Conjugate {
    fn conjugate(&self) -> Self;
}

impl Conjugate for ComplexRational {
    fn conjugate(&self) -> Self {
        self.conj()
    }
}

impl Conjugate for MultiPoly {
    fn conjugate(&self) -> Self {
        self.conj()
    }
}

impl<T: Ring + Conjugate> Matrix<T> {
    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).conjugate())
    }

    /// First `(i, j)` in row-major order with `a_ij != conj(a_ji)`.
    pub fn hermitian_violation(&self) -> Option<(usize, usize)> {
        for i in 0..self.n {
            for j in i..self.n {
                if *self.get(i, j) != self.get(j, i).conjugate() {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermitian_violation().is_none()
    }

    /// `U * self * U^dagger`.
    pub fn conjugate_by(&self, u: &Self) -> Self {
        &(u * self) * &u.adjoint()
    }
}

impl CMatrix {
    /// Builds from integer `(re, im)` rows.
    pub fn from_int_pairs(rows: &[&[(i64, i64)]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&(a, b)| ComplexRational::from_ints(a, b)).collect())
                .collect(),
        )
        .expect("square")
    }

    pub fn to_f64(&self) -> DMatrix<Complex64> {
        DMatrix::from_fn(self.n, self.n, |i, j| {
            let (re, im) = self.get(i, j).to_f64_pair();
            Complex64::new(re, im)
        })
    }

    /// Indices of the columns kept when scanning left to right and dropping
    /// every column that is a linear combination of the ones kept so far.
    pub fn independent_columns(&self) -> Vec<usize> {
        let n = self.n;
        // Reduced rows of the kept columns, stored as column vectors.
        let mut basis: Vec<(usize, Vec<ComplexRational>)> = Vec::new();
        let mut kept = Vec::new();
        for j in 0..n {
            let mut v: Vec<ComplexRational> = (0..n).map(|i| self.get(i, j).clone()).collect();
            for (pivot, b) in &basis {
                if v[*pivot].is_zero() {
                    continue;
                }
                let factor = v[*pivot].clone() / b[*pivot].clone();
                for (x, y) in v.iter_mut().zip(b) {
                    *x -= &(&factor * y);
                }
            }
            if let Some(pivot) = v.iter().position(|x| !x.is_zero()) {
                basis.push((pivot, v));
                kept.push(j);
            }
        }
        kept
    }

    pub fn rank(&self) -> usize {
        self.independent_columns().len()
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
