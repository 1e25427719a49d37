//! Exact rational matrices as a strict skeleton of finite dimensional
//! vector spaces. A morphism `n → m` is an `n × m` matrix acting on row
//! vectors, so `f ; g` is the product `F·G`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::cat::Category;
use crate::closed::{DualData, LeftDuals};
use crate::error::{Error, Result};
use crate::num::{fmt_rational, Rational};
use crate::skew::SkewMonoidal;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Rational>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}[", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                f.write_str(&fmt_rational(&self.get(i, j)))?;
            }
        }
        f.write_str("]")
    }
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::InvalidInstance(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_ints(rows: usize, cols: usize, entries: &[i64]) -> Result<Self> {
        Self::new(rows, cols, entries.iter().map(|&e| Rational::from_integer(e)).collect())
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, Rational::one())
    }

    /// `s · id_n`
    pub fn scalar(n: usize, s: Rational) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { s } else { Rational::zero() })
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.data[i * self.cols + j]
    }

    pub fn scale(&self, s: Rational) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&e| e * s).collect() }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::IllTyped(format!("{self:?} · {other:?}")));
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(Rational::zero(), |acc, k| acc + self.get(i, k) * other.get(k, j))
        }))
    }

    /// `(A⊗B)[(i,k),(j,l)] = A[i,j]·B[k,l]`, pairs in row-major order.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (p, q) = (other.rows, other.cols);
        Self::from_fn(self.rows * p, self.cols * q, |r, c| {
            self.get(r / p, c / q) * other.get(r % p, c % q)
        })
    }
}

/// Dimensions and rational matrices, tensor the Kronecker product with
/// identity coherence.
#[derive(Debug, Clone, Copy, Default)]
pub struct MatCat;

impl Category for MatCat {
    type Obj = usize;
    type Mor = Matrix;

    fn source(&self, f: &Matrix) -> usize {
        f.rows
    }
    fn target(&self, f: &Matrix) -> usize {
        f.cols
    }
    fn identity(&self, a: &usize) -> Matrix {
        Matrix::identity(*a)
    }
    fn compose(&self, f: &Matrix, g: &Matrix) -> Result<Matrix> {
        f.mul(g)
    }
    fn is_morphism(&self, f: &Matrix) -> bool {
        f.data.len() == f.rows * f.cols
    }
    fn hom(&self, a: &usize, b: &usize) -> Result<Vec<Matrix>> {
        Err(Error::NotEnumerable(format!("rational matrices {a}x{b}")))
    }
}

impl SkewMonoidal for MatCat {
    fn tensor_obj(&self, a: &usize, b: &usize) -> usize {
        a * b
    }
    fn tensor_mor(&self, f: &Matrix, g: &Matrix) -> Result<Matrix> {
        Ok(f.kron(g))
    }
    fn unit(&self) -> usize {
        1
    }
    fn assoc(&self, a: &usize, b: &usize, c: &usize) -> Result<Matrix> {
        Ok(Matrix::identity(a * b * c))
    }
    fn lunit(&self, a: &usize) -> Result<Matrix> {
        Ok(Matrix::identity(*a))
    }
    fn runit(&self, a: &usize) -> Result<Matrix> {
        Ok(Matrix::identity(*a))
    }
}

/// `∨n = n` with `ε[(i,j)] = δ_ij` and `η[(i,j)] = δ_ij`.
#[derive(Debug, Clone, Copy, Default)]
pub struct MatDuals;

impl LeftDuals for MatDuals {
    type Cat = MatCat;
    fn category(&self) -> &MatCat {
        &MatCat
    }
    fn dual(&self, a: &usize) -> Result<DualData<usize, Matrix>> {
        let n = *a;
        let delta = |k: usize| {
            if k / n.max(1) == k % n.max(1) {
                Rational::one()
            } else {
                Rational::zero()
            }
        };
        Ok(DualData {
            dual: n,
            eval: Matrix::from_fn(n * n, 1, |k, _| delta(k)),
            coeval: Matrix::from_fn(1, n * n, |_, k| delta(k)),
        })
    }
}

/// A few fixed matrices between small dimensions, for naturality checks.
pub fn sample_matrices(max_dim: usize) -> Vec<Matrix> {
    let r = Rational::from_integer;
    let mut out = Vec::new();
    for n in 1..=max_dim {
        for m in 1..=max_dim {
            out.push(Matrix::from_fn(n, m, |i, j| r((i + 2 * j) as i64 + 1) / r(2)));
            out.push(Matrix::from_fn(n, m, |i, j| if (i + j) % 2 == 0 { r(-1) } else { r(3) }));
        }
        out.push(Matrix::identity(n));
    }
    out
}
