//! Dense complex linear algebra over ℂⁿ and the matrix algebra MAT(n;ℂ):
//! inner product, norm, adjoint, Hermiticity, matrix arithmetic, and the
//! Pauli generators.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so everything here is safe to share across threads. Storage is
//! dense row-major; the intended problem sizes are small (n ≤ 64).

use std::ops::Index;

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Absolute tolerance for floating-point comparisons, `eps >= 0`.
///
/// The default is `1e-9`, applied to max entry norms unless an operation
/// documents otherwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance<T> {
    eps: T,
}

impl<T: Scalar> Tolerance<T> {
    pub fn new(eps: T) -> Result<Self> {
        if !eps.is_finite() || eps < T::zero() {
            return Err(Error::InvalidTolerance);
        }
        Ok(Self { eps })
    }

    pub fn eps(&self) -> T {
        self.eps
    }
}

impl<T: Scalar> Default for Tolerance<T> {
    fn default() -> Self {
        Self {
            eps: T::from_f64_lossy(1e-9),
        }
    }
}

fn ensure_finite<T: Scalar>(entries: &[Complex<T>]) -> Result<()> {
    if entries.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
        Ok(())
    } else {
        Err(Error::NonFinite)
    }
}

fn ensure_same_dim(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { left, right })
    }
}

/// Vector in ℂⁿ, n ≥ 1.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector<T> {
    entries: Vec<Complex<T>>,
}

impl<T: Scalar> Vector<T> {
    /// Builds a vector, rejecting empty input and non-finite entries.
    pub fn new(entries: Vec<Complex<T>>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidDimension { min: 1, got: 0 });
        }
        ensure_finite(&entries)?;
        Ok(Self { entries })
    }

    /// Vector with the given real entries.
    pub fn from_reals(values: &[T]) -> Result<Self> {
        Self::new(values.iter().map(|&x| Complex::new(x, T::zero())).collect())
    }

    /// Standard basis vector e_k in ℂⁿ.
    pub fn basis(dim: usize, k: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidDimension { min: 1, got: 0 });
        }
        if k >= dim {
            return Err(Error::IndexOutOfRange { index: k, len: dim });
        }
        let mut entries = vec![Complex::zero(); dim];
        entries[k] = Complex::one();
        Ok(Self { entries })
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Complex<T>] {
        &self.entries
    }

    /// Inner product ⟨z,w⟩ = Σ conj(z_j)·w_j: conjugate-linear in `self`,
    /// linear in `other`.
    pub fn inner(&self, other: &Self) -> Result<Complex<T>> {
        ensure_same_dim(self.dim(), other.dim())?;
        let mut acc = Complex::zero();
        for (a, b) in self.entries.iter().zip(&other.entries) {
            acc = acc + a.conj() * b;
        }
        Ok(acc)
    }

    /// Euclidean norm ‖z‖ = √⟨z,z⟩.
    pub fn norm(&self) -> T {
        self.norm_sq().sqrt()
    }

    /// ‖z‖² = Σ |z_j|², accumulated directly in the reals.
    pub fn norm_sq(&self) -> T {
        self.entries
            .iter()
            .fold(T::zero(), |acc, z| acc + z.re * z.re + z.im * z.im)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        ensure_same_dim(self.dim(), other.dim())?;
        Ok(Self {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        ensure_same_dim(self.dim(), other.dim())?;
        Ok(Self {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, factor: Complex<T>) -> Self {
        Self {
            entries: self.entries.iter().map(|z| z * factor).collect(),
        }
    }

    /// z/‖z‖; errors when the norm is too small (or too large) to divide by.
    pub fn normalize(&self) -> Result<Self> {
        let n = self.norm();
        if !n.is_finite() {
            return Err(Error::NonFinite);
        }
        let inv = T::one() / n;
        if n <= T::zero() || !inv.is_finite() {
            return Err(Error::ZeroVector {
                norm: n.to_f64().unwrap_or(0.0),
            });
        }
        Ok(self.scale(Complex::new(inv, T::zero())))
    }

    /// Outer product z·w*: the matrix with entries z_j · conj(w_k).
    pub fn outer(&self, other: &Self) -> Result<Matrix<T>> {
        ensure_same_dim(self.dim(), other.dim())?;
        let n = self.dim();
        let mut entries = Vec::with_capacity(n * n);
        for j in 0..n {
            for k in 0..n {
                entries.push(self.entries[j] * other.entries[k].conj());
            }
        }
        Ok(Matrix { dim: n, entries })
    }

    /// Max entry modulus of the difference, for tolerance comparisons.
    pub fn distance_max(&self, other: &Self) -> Result<T> {
        ensure_same_dim(self.dim(), other.dim())?;
        let mut d = T::zero();
        for (a, b) in self.entries.iter().zip(&other.entries) {
            d = d.max((a - b).norm());
        }
        Ok(d)
    }
}

impl<T> Index<usize> for Vector<T> {
    type Output = Complex<T>;

    fn index(&self, k: usize) -> &Complex<T> {
        &self.entries[k]
    }
}

/// Dense n×n complex matrix in row-major order, n ≥ 1.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    dim: usize,
    entries: Vec<Complex<T>>,
}

impl<T: Scalar> Matrix<T> {
    /// Builds an n×n matrix from `n²` row-major entries.
    pub fn new(dim: usize, entries: Vec<Complex<T>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidDimension { min: 1, got: 0 });
        }
        if entries.len() != dim * dim {
            return Err(Error::WrongLength {
                expected: dim * dim,
                got: entries.len(),
            });
        }
        ensure_finite(&entries)?;
        Ok(Self { dim, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Complex<T>>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::InvalidDimension { min: 1, got: 0 });
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for row in &rows {
            if row.len() != dim {
                return Err(Error::WrongLength {
                    expected: dim,
                    got: row.len(),
                });
            }
            entries.extend_from_slice(row);
        }
        Self::new(dim, entries)
    }

    /// Diagonal matrix with the given real diagonal.
    pub fn diagonal(values: &[T]) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::InvalidDimension { min: 1, got: 0 });
        }
        let mut m = Self::zero(n);
        for (j, &v) in values.iter().enumerate() {
            m.entries[j * n + j] = Complex::new(v, T::zero());
        }
        ensure_finite(&m.entries)?;
        Ok(m)
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n.max(1));
        for j in 0..m.dim {
            m.entries[j * m.dim + j] = Complex::one();
        }
        m
    }

    pub fn zero(n: usize) -> Self {
        let n = n.max(1);
        Self {
            dim: n,
            entries: vec![Complex::zero(); n * n],
        }
    }

    /// The k-th Pauli matrix, k ∈ {1,2,3}:
    /// σ₁ = [[0,1],[1,0]], σ₂ = [[0,−i],[i,0]], σ₃ = [[1,0],[0,−1]].
    pub fn pauli(k: usize) -> Result<Self> {
        let o = T::zero();
        let l = T::one();
        let entries = match k {
            1 => vec![
                Complex::new(o, o),
                Complex::new(l, o),
                Complex::new(l, o),
                Complex::new(o, o),
            ],
            2 => vec![
                Complex::new(o, o),
                Complex::new(o, -l),
                Complex::new(o, l),
                Complex::new(o, o),
            ],
            3 => vec![
                Complex::new(l, o),
                Complex::new(o, o),
                Complex::new(o, o),
                Complex::new(-l, o),
            ],
            _ => return Err(Error::PauliIndex { got: k }),
        };
        Ok(Self { dim: 2, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Complex<T>] {
        &self.entries
    }

    pub fn row(&self, j: usize) -> &[Complex<T>] {
        &self.entries[j * self.dim..(j + 1) * self.dim]
    }

    /// Conjugate transpose A*.
    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut entries = Vec::with_capacity(n * n);
        for j in 0..n {
            for k in 0..n {
                entries.push(self.entries[k * n + j].conj());
            }
        }
        Self { dim: n, entries }
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        ensure_same_dim(self.dim, other.dim)?;
        let n = self.dim;
        let mut entries = vec![Complex::zero(); n * n];
        for j in 0..n {
            for m in 0..n {
                let a = self.entries[j * n + m];
                if a.is_zero() {
                    continue;
                }
                for k in 0..n {
                    entries[j * n + k] = entries[j * n + k] + a * other.entries[m * n + k];
                }
            }
        }
        Ok(Self { dim: n, entries })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        ensure_same_dim(self.dim, other.dim)?;
        Ok(Self {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        ensure_same_dim(self.dim, other.dim)?;
        Ok(Self {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, factor: Complex<T>) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn scale_real(&self, factor: T) -> Self {
        self.scale(Complex::new(factor, T::zero()))
    }

    /// Matrix-vector action (Az)_j = Σ_k A_jk z_k.
    pub fn apply(&self, z: &Vector<T>) -> Result<Vector<T>> {
        ensure_same_dim(self.dim, z.dim())?;
        let n = self.dim;
        let mut entries = Vec::with_capacity(n);
        for j in 0..n {
            let mut acc = Complex::zero();
            for k in 0..n {
                acc = acc + self.entries[j * n + k] * z[k];
            }
            entries.push(acc);
        }
        Ok(Vector { entries })
    }

    /// Commutator [A,B] = AB − BA.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.matmul(other)?.sub(&other.matmul(self)?)
    }

    /// True iff ‖A − A*‖_max ≤ eps.
    pub fn is_hermitian(&self, tol: Tolerance<T>) -> bool {
        self.asymmetry() <= tol.eps()
    }

    /// ‖A − A*‖_max, the distance from being self-adjoint.
    pub fn asymmetry(&self) -> T {
        let n = self.dim;
        let mut worst = T::zero();
        for j in 0..n {
            for k in j..n {
                let d = (self.entries[j * n + k] - self.entries[k * n + j].conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    pub fn trace(&self) -> Complex<T> {
        let n = self.dim;
        (0..n).fold(Complex::zero(), |acc, j| acc + self.entries[j * n + j])
    }

    /// Max entry modulus.
    pub fn norm_max(&self) -> T {
        self.entries
            .iter()
            .fold(T::zero(), |acc, z| acc.max(z.norm()))
    }

    /// Frobenius norm.
    pub fn norm_fro(&self) -> T {
        self.entries
            .iter()
            .fold(T::zero(), |acc, z| acc + z.norm_sqr())
            .sqrt()
    }

    /// Max entry modulus of A − B, for tolerance comparisons.
    pub fn distance_max(&self, other: &Self) -> Result<T> {
        ensure_same_dim(self.dim, other.dim)?;
        let mut d = T::zero();
        for (a, b) in self.entries.iter().zip(&other.entries) {
            d = d.max((a - b).norm());
        }
        Ok(d)
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = Complex<T>;

    fn index(&self, (j, k): (usize, usize)) -> &Complex<T> {
        &self.entries[j * self.dim + k]
    }
}
