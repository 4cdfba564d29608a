//! Eigendecomposition of Hermitian matrices and the spectral resolution
//! A = λ₁E₁ + ⋯ + λₖEₖ into distinct real eigenvalues and mutually
//! orthogonal projectors, together with the projector ↔ subspace
//! correspondence.
//!
//! The eigensolver is a cyclic Jacobi iteration adapted to complex Hermitian
//! matrices: each rotation is a unitary 2×2 transform that annihilates one
//! off-diagonal entry, sweeping until the off-diagonal Frobenius norm drops
//! below `eps·‖A‖_F`, with a hard cap of 100 sweeps. It is dependency-free,
//! unconditionally convergent on Hermitian input, and entirely adequate for
//! the small dimensions this crate targets.

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Tolerance, Vector};
use crate::scalar::Scalar;

const MAX_SWEEPS: usize = 100;

/// Matrix E with E = E* = E², tagged with its rank (the dimension of Ran E).
#[derive(Debug, Clone, PartialEq)]
pub struct OrthogonalProjector<T> {
    matrix: Matrix<T>,
    rank: usize,
}

impl<T: Scalar> OrthogonalProjector<T> {
    /// Validates E = E* and E = E² within `tol`, and that the trace rounds
    /// to an integer rank within the clustering tolerance.
    pub fn new(matrix: Matrix<T>, tol: Tolerance<T>) -> Result<Self> {
        let asym = matrix.asymmetry();
        if asym > tol.eps() {
            return Err(Error::NotProjector {
                reason: format!("E != E*: asymmetry {:e}", asym.to_f64().unwrap_or(f64::NAN)),
            });
        }
        let idem = matrix.matmul(&matrix)?.distance_max(&matrix)?;
        if idem > tol.eps() {
            return Err(Error::NotProjector {
                reason: format!(
                    "E != E^2: deviation {:e}",
                    idem.to_f64().unwrap_or(f64::NAN)
                ),
            });
        }
        let rank = integer_rank(&matrix, tol)?;
        Ok(Self { matrix, rank })
    }

    /// Projector Σ v·v* onto the span of an orthonormal family.
    ///
    /// Errors name the first offending pair when the family is not
    /// orthonormal within `tol`.
    pub fn from_basis(vectors: &[Vector<T>], tol: Tolerance<T>) -> Result<Self> {
        if vectors.is_empty() {
            return Err(Error::InvalidDimension { min: 1, got: 0 });
        }
        let n = vectors[0].dim();
        for (i, v) in vectors.iter().enumerate() {
            if v.dim() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: v.dim(),
                });
            }
            for (j, w) in vectors.iter().enumerate().take(i + 1) {
                let ip = v.inner(w)?;
                let target = if i == j { T::one() } else { T::zero() };
                let deviation = (ip - Complex::new(target, T::zero())).norm();
                if deviation > tol.eps() {
                    return Err(Error::NotOrthonormal {
                        i: j,
                        j: i,
                        deviation: deviation.to_f64().unwrap_or(f64::NAN),
                    });
                }
            }
        }
        let mut sum = Matrix::zero(n);
        for v in vectors {
            sum = sum.add(&v.outer(v)?)?;
        }
        Ok(Self {
            matrix: sum,
            rank: vectors.len(),
        })
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// Projector onto the orthogonal complement, I − E.
    ///
    /// Exact arithmetic on the entries; no revalidation (I − E inherits the
    /// defining identities from E with the same deviation).
    pub fn complement(&self) -> Self {
        let matrix = Matrix::identity(self.dim())
            .sub(&self.matrix)
            .expect("same dim");
        Self {
            matrix,
            rank: self.dim() - self.rank,
        }
    }

    /// Orthonormal basis of Ran(E), recovered from the eigenvectors of E
    /// with eigenvalue near 1.
    pub fn range_basis(&self, tol: Tolerance<T>) -> Result<Vec<Vector<T>>> {
        let half = T::from_f64_lossy(0.5);
        let basis: Vec<Vector<T>> = eigh(&self.matrix, tol)?
            .into_iter()
            .filter(|(value, _)| *value > half)
            .map(|(_, v)| v)
            .collect();
        if basis.len() != self.rank {
            return Err(Error::Internal(format!(
                "range basis size {} disagrees with rank {}",
                basis.len(),
                self.rank
            )));
        }
        Ok(basis)
    }
}

/// One eigenvalue together with an orthonormal basis of its eigenspace.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenPair<T> {
    value: T,
    vectors: Vec<Vector<T>>,
}

impl<T: Scalar> EigenPair<T> {
    pub fn value(&self) -> T {
        self.value
    }

    pub fn vectors(&self) -> &[Vector<T>] {
        &self.vectors
    }

    pub fn multiplicity(&self) -> usize {
        self.vectors.len()
    }
}

/// The unique decomposition A = Σ λⱼEⱼ of a Hermitian matrix into strictly
/// increasing real eigenvalues and mutually orthogonal projectors that sum
/// to the identity.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralResolution<T> {
    dim: usize,
    terms: Vec<(T, OrthogonalProjector<T>)>,
}

impl<T: Scalar> SpectralResolution<T> {
    /// Builds a resolution from explicit terms, validating the defining
    /// invariants: strictly increasing values, EᵢEⱼ = 0 for i ≠ j,
    /// ΣEⱼ = I, and ranks summing to n.
    pub fn new(terms: Vec<(T, OrthogonalProjector<T>)>, tol: Tolerance<T>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::InvalidDimension { min: 1, got: 0 });
        }
        let dim = terms[0].1.dim();
        let mut sum = Matrix::zero(dim);
        let mut rank_sum = 0;
        for (i, (value, proj)) in terms.iter().enumerate() {
            if proj.dim() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: proj.dim(),
                });
            }
            if !value.is_finite() {
                return Err(Error::NonFinite);
            }
            if i > 0 && terms[i - 1].0 >= *value {
                return Err(Error::Internal(
                    "spectral values must be strictly increasing".into(),
                ));
            }
            for (_, other) in terms.iter().take(i) {
                let prod = proj.matrix().matmul(other.matrix())?;
                if prod.norm_max() > tol.eps() {
                    return Err(Error::Internal(
                        "projectors in a resolution must be mutually orthogonal".into(),
                    ));
                }
            }
            sum = sum.add(proj.matrix())?;
            rank_sum += proj.rank();
        }
        if sum.distance_max(&Matrix::identity(dim))? > tol.eps() {
            return Err(Error::Internal(
                "projectors in a resolution must sum to the identity".into(),
            ));
        }
        if rank_sum != dim {
            return Err(Error::Internal(format!(
                "projector ranks sum to {rank_sum}, expected {dim}"
            )));
        }
        Ok(Self { dim, terms })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &[(T, OrthogonalProjector<T>)] {
        &self.terms
    }

    pub fn values(&self) -> impl Iterator<Item = T> + '_ {
        self.terms.iter().map(|(v, _)| *v)
    }

    /// Σ λⱼ·Eⱼ. The output is Hermitian by construction.
    pub fn reconstruct(&self) -> Matrix<T> {
        let mut acc = Matrix::zero(self.dim);
        for (value, proj) in &self.terms {
            acc = acc
                .add(&proj.matrix().scale_real(*value))
                .expect("same dim");
        }
        acc
    }

    pub(crate) fn from_parts_unchecked(
        dim: usize,
        terms: Vec<(T, OrthogonalProjector<T>)>,
    ) -> Self {
        Self { dim, terms }
    }
}

/// True iff both defining identities E = E* and E = E² hold within `tol`.
pub fn is_projector<T: Scalar>(a: &Matrix<T>, tol: Tolerance<T>) -> bool {
    a.asymmetry() <= tol.eps()
        && a.matmul(a)
            .and_then(|sq| sq.distance_max(a))
            .map(|d| d <= tol.eps())
            .unwrap_or(false)
}

/// Default gap rule for deciding when two computed eigenvalues belong to the
/// same exact eigenvalue: `max(1e-8, 1e3·eps) · max(1, ‖A‖_F)`.
pub fn default_cluster_tol<T: Scalar>(tol: Tolerance<T>, matrix_norm: T) -> T {
    let floor = T::from_f64_lossy(1e-8);
    let scaled = T::from_f64_lossy(1e3) * tol.eps();
    floor.max(scaled) * T::one().max(matrix_norm)
}

/// Full eigendecomposition of a Hermitian matrix.
///
/// Returns n (eigenvalue, eigenvector) pairs sorted ascending by eigenvalue,
/// with orthonormal eigenvectors. Each eigenvector is scaled so that its
/// largest-modulus component is real positive, which makes the output
/// deterministic.
pub fn eigh<T: Scalar>(a: &Matrix<T>, tol: Tolerance<T>) -> Result<Vec<(T, Vector<T>)>> {
    let asym = a.asymmetry();
    if asym > tol.eps() {
        return Err(Error::NotHermitian {
            max_asymmetry: asym.to_f64().unwrap_or(f64::NAN),
        });
    }
    let n = a.dim();
    let mut work: Vec<Complex<T>> = a.entries().to_vec();
    // Fold the (within-tolerance) asymmetry away so the iteration sees an
    // exactly Hermitian matrix.
    for j in 0..n {
        work[j * n + j] = Complex::new(work[j * n + j].re, T::zero());
        for k in j + 1..n {
            let avg = (work[j * n + k] + work[k * n + j].conj()).unscale(T::one() + T::one());
            work[j * n + k] = avg;
            work[k * n + j] = avg.conj();
        }
    }
    let mut q: Vec<Complex<T>> = Matrix::identity(n).entries().to_vec();
    let threshold = tol.eps() * a.norm_fro();

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_fro(&work, n);
        if off <= threshold {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                off_diagonal: off.to_f64().unwrap_or(f64::NAN),
            });
        }
        for p in 0..n {
            for r in p + 1..n {
                rotate(&mut work, &mut q, n, p, r);
            }
        }
        sweeps += 1;
    }

    let mut pairs: Vec<(T, Vector<T>)> = (0..n)
        .map(|j| {
            let value = work[j * n + j].re;
            let column: Vec<Complex<T>> = (0..n).map(|k| q[k * n + j]).collect();
            (
                value,
                fix_phase(Vector::new(column).expect("finite rotation output")),
            )
        })
        .collect();
    pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("eigenvalues are finite"));
    Ok(pairs)
}

/// Off-diagonal Frobenius norm √(Σ_{j≠k} |a_jk|²).
fn off_diagonal_fro<T: Scalar>(m: &[Complex<T>], n: usize) -> T {
    let mut acc = T::zero();
    for j in 0..n {
        for k in 0..n {
            if j != k {
                acc = acc + m[j * n + k].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// One Jacobi rotation annihilating the (p,r) entry, p < r.
///
/// Writes A ← V*AV and Q ← QV where V is the identity outside the (p,r)
/// plane and, with α = a_pp, β = a_rr, a_pr = g·e^{iφ}, τ = (α−β)/(2g),
/// t = sgn(τ)/(|τ| + √(1+τ²)), c = 1/√(1+t²), s = t·c:
///
/// ```text
/// V[p][p] = c            V[p][r] = −s·e^{iφ}
/// V[r][p] = s·e^{−iφ}    V[r][r] = c
/// ```
///
/// The rotated diagonal entries are α + t·g and β − t·g.
fn rotate<T: Scalar>(m: &mut [Complex<T>], q: &mut [Complex<T>], n: usize, p: usize, r: usize) {
    let apr = m[p * n + r];
    let g = apr.norm();
    if g.is_zero() {
        return;
    }
    let alpha = m[p * n + p].re;
    let beta = m[r * n + r].re;
    let two = T::one() + T::one();
    let tau = (alpha - beta) / (two * g);
    let t = if tau >= T::zero() {
        T::one() / (tau + (T::one() + tau * tau).sqrt())
    } else {
        -T::one() / (-tau + (T::one() + tau * tau).sqrt())
    };
    let c = T::one() / (T::one() + t * t).sqrt();
    let s = t * c;
    let phase = apr.unscale(g); // e^{iφ}
    let cs = Complex::new(c, T::zero());
    let s_phase = phase.scale(s); // s·e^{iφ}
    let s_phase_conj = phase.conj().scale(s); // s·e^{−iφ}

    for k in 0..n {
        if k == p || k == r {
            continue;
        }
        let akp = m[k * n + p];
        let akr = m[k * n + r];
        let new_kp = akp * cs + akr * s_phase_conj;
        let new_kr = akr * cs - akp * s_phase;
        m[k * n + p] = new_kp;
        m[p * n + k] = new_kp.conj();
        m[k * n + r] = new_kr;
        m[r * n + k] = new_kr.conj();
    }
    m[p * n + p] = Complex::new(alpha + t * g, T::zero());
    m[r * n + r] = Complex::new(beta - t * g, T::zero());
    m[p * n + r] = Complex::zero();
    m[r * n + p] = Complex::zero();

    for k in 0..n {
        let qkp = q[k * n + p];
        let qkr = q[k * n + r];
        q[k * n + p] = qkp * cs + qkr * s_phase_conj;
        q[k * n + r] = qkr * cs - qkp * s_phase;
    }
}

/// Scales a vector so its largest-modulus component is real positive.
fn fix_phase<T: Scalar>(v: Vector<T>) -> Vector<T> {
    let mut best = 0;
    let mut best_norm = T::zero();
    for (k, z) in v.entries().iter().enumerate() {
        let nz = z.norm();
        if nz > best_norm {
            best_norm = nz;
            best = k;
        }
    }
    if best_norm.is_zero() {
        return v;
    }
    let pivot = v.entries()[best];
    v.scale(pivot.conj().unscale(best_norm))
}

/// Groups the output of [`eigh`] into eigenspaces using the default gap rule.
pub fn eigenspaces<T: Scalar>(a: &Matrix<T>, tol: Tolerance<T>) -> Result<Vec<EigenPair<T>>> {
    eigenspaces_with_cluster_tol(a, tol, default_cluster_tol(tol, a.norm_fro()))
}

/// Groups the output of [`eigh`] with a caller-supplied clustering gap:
/// sorted eigenvalues start a new cluster whenever the gap to the previous
/// one exceeds `cluster_tol`. Each cluster's value is the mean of its
/// members.
pub fn eigenspaces_with_cluster_tol<T: Scalar>(
    a: &Matrix<T>,
    tol: Tolerance<T>,
    cluster_tol: T,
) -> Result<Vec<EigenPair<T>>> {
    let pairs = eigh(a, tol)?;
    let mut out: Vec<EigenPair<T>> = Vec::new();
    let mut current: Vec<(T, Vector<T>)> = Vec::new();
    for (value, vector) in pairs {
        if let Some(&(last, _)) = current.last() {
            if value - last > cluster_tol {
                out.push(close_cluster(std::mem::take(&mut current)));
            }
        }
        current.push((value, vector));
    }
    if !current.is_empty() {
        out.push(close_cluster(current));
    }
    Ok(out)
}

fn close_cluster<T: Scalar>(members: Vec<(T, Vector<T>)>) -> EigenPair<T> {
    let count = T::from_usize(members.len()).expect("small cluster size");
    let sum = members
        .iter()
        .fold(T::zero(), |acc, (value, _)| acc + *value);
    EigenPair {
        value: sum / count,
        vectors: members.into_iter().map(|(_, v)| v).collect(),
    }
}

/// The spectral resolution of a Hermitian matrix, with the default
/// eigenvalue clustering rule.
pub fn spectral_resolution<T: Scalar>(
    a: &Matrix<T>,
    tol: Tolerance<T>,
) -> Result<SpectralResolution<T>> {
    spectral_resolution_with_cluster_tol(a, tol, default_cluster_tol(tol, a.norm_fro()))
}

/// The spectral resolution with a caller-supplied clustering gap.
pub fn spectral_resolution_with_cluster_tol<T: Scalar>(
    a: &Matrix<T>,
    tol: Tolerance<T>,
    cluster_tol: T,
) -> Result<SpectralResolution<T>> {
    let spaces = eigenspaces_with_cluster_tol(a, tol, cluster_tol)?;
    let n = a.dim();
    let mut terms = Vec::with_capacity(spaces.len());
    for pair in spaces {
        let mut sum = Matrix::zero(n);
        for v in pair.vectors() {
            sum = sum.add(&v.outer(v)?)?;
        }
        let rank = pair.multiplicity();
        debug_assert_eq!(projector_rank_check(&sum, cluster_tol), Some(rank));
        terms.push((pair.value(), OrthogonalProjector { matrix: sum, rank }));
    }
    Ok(SpectralResolution::from_parts_unchecked(n, terms))
}

#[cfg(debug_assertions)]
fn projector_rank_check<T: Scalar>(m: &Matrix<T>, cluster_tol: T) -> Option<usize> {
    let trace = m.trace().re;
    let rounded = trace.round();
    if (trace - rounded).abs() <= cluster_tol {
        rounded.to_usize()
    } else {
        None
    }
}

/// Rank of a projector as the rounded trace; errors when the trace is not
/// within the clustering tolerance of an integer.
fn integer_rank<T: Scalar>(m: &Matrix<T>, tol: Tolerance<T>) -> Result<usize> {
    let bound = default_cluster_tol(tol, m.norm_fro());
    let trace = m.trace().re;
    let rounded = trace.round();
    if (trace - rounded).abs() > bound || rounded < T::zero() {
        return Err(Error::NonIntegerRank {
            trace: trace.to_f64().unwrap_or(f64::NAN),
        });
    }
    rounded.to_usize().ok_or(Error::NonIntegerRank {
        trace: trace.to_f64().unwrap_or(f64::NAN),
    })
}
