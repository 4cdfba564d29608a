//! Quantum events, pure states, Born-rule probabilities, collapse, expected
//! values, and state functionals on the *-algebra MAT(n;ℂ), together with
//! the embedding of finite classical probability as the commutative special
//! case.

use num_complex::Complex;

use crate::classical::{FiniteProbabilitySpace, RandomVariable};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Tolerance, Vector};
use crate::rng::SplitMix64;
use crate::scalar::Scalar;
use crate::spectral::{self, OrthogonalProjector, SpectralResolution};

/// Unit vector in ℂⁿ; two states are the same physical state when they
/// differ by a global phase.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState<T> {
    vector: Vector<T>,
}

impl<T: Scalar> PureState<T> {
    /// Wraps a vector whose norm is already 1 within `tol`.
    pub fn new(vector: Vector<T>, tol: Tolerance<T>) -> Result<Self> {
        let norm = vector.norm();
        if (norm - T::one()).abs() > tol.eps() {
            return Err(Error::NotUnit {
                norm: norm.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { vector })
    }

    /// Normalizes an arbitrary nonzero vector into a state.
    pub fn normalized(vector: &Vector<T>) -> Result<Self> {
        Ok(Self {
            vector: vector.normalize()?,
        })
    }

    pub fn vector(&self) -> &Vector<T> {
        &self.vector
    }

    pub fn dim(&self) -> usize {
        self.vector.dim()
    }

    /// Phase-class equality: z ≡ w iff |⟨z,w⟩| = 1 within `tol`.
    pub fn phase_eq(&self, other: &Self, tol: Tolerance<T>) -> Result<bool> {
        let overlap = self.vector.inner(&other.vector)?.norm();
        Ok((overlap - T::one()).abs() <= tol.eps())
    }
}

/// A quantum event is an orthogonal projector.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumEvent<T> {
    projector: OrthogonalProjector<T>,
}

impl<T: Scalar> QuantumEvent<T> {
    pub fn new(projector: OrthogonalProjector<T>) -> Self {
        Self { projector }
    }

    /// The certain event: the identity projector on ℂⁿ.
    pub fn certain(n: usize, tol: Tolerance<T>) -> Result<Self> {
        Ok(Self {
            projector: OrthogonalProjector::new(Matrix::identity(n), tol)?,
        })
    }

    pub fn projector(&self) -> &OrthogonalProjector<T> {
        &self.projector
    }

    pub fn matrix(&self) -> &Matrix<T> {
        self.projector.matrix()
    }

    pub fn dim(&self) -> usize {
        self.projector.dim()
    }
}

impl<T: Scalar> From<OrthogonalProjector<T>> for QuantumEvent<T> {
    fn from(projector: OrthogonalProjector<T>) -> Self {
        Self { projector }
    }
}

/// Positive normalized linear functional ρ on MAT(n;ℂ), represented by its
/// trace form: ρ(M) = tr(D·M) with D Hermitian, positive semidefinite, and
/// of unit trace.
#[derive(Debug, Clone, PartialEq)]
pub struct StateFunctional<T> {
    form: Matrix<T>,
}

impl<T: Scalar> StateFunctional<T> {
    /// Validates the three axioms before wrapping the trace form.
    pub fn new(form: Matrix<T>, tol: Tolerance<T>) -> Result<Self> {
        let diag = verify_state(&form, tol);
        if let Some(axiom) = diag.violated.first() {
            return Err(Error::InvalidStateFunctional {
                reason: format!("{axiom:?} axiom fails: {diag:?}"),
            });
        }
        Ok(Self { form })
    }

    pub fn form(&self) -> &Matrix<T> {
        &self.form
    }

    pub fn dim(&self) -> usize {
        self.form.dim()
    }

    /// ρ(M) = tr(D·M).
    pub fn evaluate(&self, m: &Matrix<T>) -> Result<Complex<T>> {
        Ok(self.form.matmul(m)?.trace())
    }
}

/// The vector state ρ(M) = ⟨z, M z⟩, realized as the rank-one trace form
/// D = z·z*.
pub fn pure_state_functional<T: Scalar>(z: &PureState<T>) -> StateFunctional<T> {
    let form = z
        .vector()
        .outer(z.vector())
        .expect("outer product of equal dims");
    StateFunctional { form }
}

/// Axioms a trace form can violate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StateAxiom {
    /// D = D*.
    Hermitian,
    /// All eigenvalues ≥ 0, equivalently ρ(M*M) ≥ 0 for all M.
    Positive,
    /// tr(D) = 1, equivalently ρ(I) = 1.
    Normalized,
}

/// Outcome of [`verify_state`]: which axioms failed, with the measured
/// quantities behind each verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct StateDiagnostics<T> {
    pub max_asymmetry: T,
    /// Smallest eigenvalue of D; `None` when D is not Hermitian (the
    /// eigensolver does not apply).
    pub min_eigenvalue: Option<T>,
    pub trace: Complex<T>,
    /// Smallest ρ(M*M) over the random spot-check batch.
    pub spot_check_min: T,
    pub violated: Vec<StateAxiom>,
}

impl<T> StateDiagnostics<T> {
    pub fn pass(&self) -> bool {
        self.violated.is_empty()
    }
}

const SPOT_CHECK_BATCH: usize = 32;
const SPOT_CHECK_SEED: u64 = 0x5747_4543_4845_434B;

/// Checks the state-functional axioms for a candidate trace form D:
/// Hermiticity, positive semidefiniteness (min eigenvalue ≥ −eps), and unit
/// trace, plus a randomized spot check that ρ(M*M) ≥ −eps.
pub fn verify_state<T: Scalar>(d: &Matrix<T>, tol: Tolerance<T>) -> StateDiagnostics<T> {
    let eps = tol.eps();
    let mut violated = Vec::new();

    let max_asymmetry = d.asymmetry();
    if max_asymmetry > eps {
        violated.push(StateAxiom::Hermitian);
    }

    let min_eigenvalue = if max_asymmetry <= eps {
        match spectral::eigh(d, tol) {
            Ok(pairs) => pairs.first().map(|(value, _)| *value),
            Err(_) => None,
        }
    } else {
        None
    };
    if let Some(min) = min_eigenvalue {
        if min < -eps {
            violated.push(StateAxiom::Positive);
        }
    }

    let trace = d.trace();
    if (trace.re - T::one()).abs() > eps || trace.im.abs() > eps {
        violated.push(StateAxiom::Normalized);
    }

    // ρ(M*M) ≥ 0 spot check on a deterministic batch of random M.
    let mut rng = SplitMix64::new(SPOT_CHECK_SEED);
    let n = d.dim();
    let mut spot_check_min = T::infinity();
    for _ in 0..SPOT_CHECK_BATCH {
        let entries: Vec<Complex<T>> = (0..n * n)
            .map(|_| {
                Complex::new(
                    T::from_f64_lossy(rng.next_symmetric()),
                    T::from_f64_lossy(rng.next_symmetric()),
                )
            })
            .collect();
        let m = Matrix::new(n, entries).expect("finite random entries");
        let mm = m.adjoint().matmul(&m).expect("same dim");
        let value = d.matmul(&mm).expect("same dim").trace().re;
        spot_check_min = spot_check_min.min(value);
    }
    if spot_check_min < -eps && !violated.contains(&StateAxiom::Positive) {
        violated.push(StateAxiom::Positive);
    }

    StateDiagnostics {
        max_asymmetry,
        min_eigenvalue,
        trace,
        spot_check_min,
        violated,
    }
}

/// One outcome of measuring an observable: the eigenvalue, its Born
/// probability, and the collapsed state (absent on probability-~0 branches).
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementOutcome<T> {
    pub value: T,
    pub probability: T,
    pub post_state: Option<PureState<T>>,
}

/// Born distribution of an observable in a state, outcomes sorted ascending
/// by eigenvalue. Probabilities sum to 1 within tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementDistribution<T> {
    outcomes: Vec<MeasurementOutcome<T>>,
}

impl<T: Scalar> MeasurementDistribution<T> {
    pub fn outcomes(&self) -> &[MeasurementOutcome<T>] {
        &self.outcomes
    }

    pub fn total_probability(&self) -> T {
        self.outcomes
            .iter()
            .fold(T::zero(), |acc, o| acc + o.probability)
    }
}

/// Born rule: Prob(E; z) = ⟨z, Ez⟩ = ‖Ez‖².
///
/// Both formulas are evaluated and cross-checked; the result is clamped to
/// [0, 1] after verifying the raw value lies within eps of that interval.
pub fn born_probability<T: Scalar>(event: &QuantumEvent<T>, z: &PureState<T>) -> Result<T> {
    born_probability_raw(event.matrix(), z).map(|(clamped, _)| clamped)
}

/// Returns (clamped, raw) so callers can inspect the pre-clamp value.
fn born_probability_raw<T: Scalar>(e: &Matrix<T>, z: &PureState<T>) -> Result<(T, T)> {
    // Floored at machine-precision scale so the self-check stays meaningful
    // in single precision.
    let eps = Tolerance::<T>::default()
        .eps()
        .max(T::epsilon() * T::from_f64_lossy(100.0));
    let ez = e.apply(z.vector())?;
    let bracket = z.vector().inner(&ez)?;
    let by_norm = ez.norm_sq();
    if (bracket.re - by_norm).abs() > eps || bracket.im.abs() > eps {
        return Err(Error::Internal(format!(
            "Born formulas disagree: <z,Ez> = {:?}, |Ez|^2 = {:?}",
            bracket.re.to_f64(),
            by_norm.to_f64()
        )));
    }
    let raw = bracket.re;
    if raw < -eps || raw > T::one() + eps {
        return Err(Error::Internal(format!(
            "Born probability {:?} outside [0,1] beyond tolerance",
            raw.to_f64()
        )));
    }
    Ok((raw.max(T::zero()).min(T::one()), raw))
}

/// Post-measurement state Ez/‖Ez‖.
///
/// Errors with `ImpossibleOutcome` when ‖Ez‖ ≤ eps: collapse is undefined on
/// probability-zero branches.
pub fn collapse<T: Scalar>(
    event: &QuantumEvent<T>,
    z: &PureState<T>,
    tol: Tolerance<T>,
) -> Result<PureState<T>> {
    let ez = event.matrix().apply(z.vector())?;
    let norm = ez.norm();
    if norm <= tol.eps() {
        return Err(Error::ImpossibleOutcome {
            norm: norm.to_f64().unwrap_or(0.0),
        });
    }
    Ok(PureState {
        vector: ez.scale(Complex::new(T::one() / norm, T::zero())),
    })
}

/// Measures a Hermitian observable in a state: the spectral resolution is
/// computed and each eigenvalue λⱼ is reported with probability ⟨z, Eⱼz⟩ and
/// collapsed state Eⱼz/‖Eⱼz‖.
pub fn measure<T: Scalar>(
    a: &Matrix<T>,
    z: &PureState<T>,
    tol: Tolerance<T>,
) -> Result<MeasurementDistribution<T>> {
    if a.dim() != z.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: z.dim(),
        });
    }
    let resolution = spectral::spectral_resolution(a, tol)?;
    distribution_from_resolution(&resolution, z, tol)
}

/// Born distribution for an already-computed spectral resolution.
pub fn distribution_from_resolution<T: Scalar>(
    resolution: &SpectralResolution<T>,
    z: &PureState<T>,
    tol: Tolerance<T>,
) -> Result<MeasurementDistribution<T>> {
    let mut outcomes = Vec::with_capacity(resolution.terms().len());
    for (value, projector) in resolution.terms() {
        let (probability, _) = born_probability_raw(projector.matrix(), z)?;
        let post_state = if probability > tol.eps() {
            let event = QuantumEvent::new(projector.clone());
            Some(collapse(&event, z, tol)?)
        } else {
            None
        };
        outcomes.push(MeasurementOutcome {
            value: *value,
            probability,
            post_state,
        });
    }
    Ok(MeasurementDistribution { outcomes })
}

/// Expected value ⟨A⟩_z = ⟨z, Az⟩ of a Hermitian observable.
pub fn expected_value<T: Scalar>(a: &Matrix<T>, z: &PureState<T>) -> Result<T> {
    let tol = Tolerance::<T>::default();
    let asym = a.asymmetry();
    if asym > tol.eps() {
        return Err(Error::NotHermitian {
            max_asymmetry: asym.to_f64().unwrap_or(f64::NAN),
        });
    }
    let bracket = z.vector().inner(&a.apply(z.vector())?)?;
    if bracket.im.abs() > tol.eps() {
        return Err(Error::Internal(format!(
            "expected value of Hermitian observable has imaginary part {:?}",
            bracket.im.to_f64()
        )));
    }
    Ok(bracket.re)
}

/// Verifies the four *-algebra axioms on concrete operands:
/// (A+B)* = A*+B*, (λA)* = λ*A*, (AB)* = B*A*, A** = A.
pub fn star_axioms_check<T: Scalar>(
    a: &Matrix<T>,
    b: &Matrix<T>,
    lambda: Complex<T>,
) -> Result<bool> {
    let eps = Tolerance::<T>::default().eps();
    let additive = a
        .add(b)?
        .adjoint()
        .distance_max(&a.adjoint().add(&b.adjoint())?)?;
    let scalar = a
        .scale(lambda)
        .adjoint()
        .distance_max(&a.adjoint().scale(lambda.conj()))?;
    let product = a
        .matmul(b)?
        .adjoint()
        .distance_max(&b.adjoint().matmul(&a.adjoint())?)?;
    let involution = a.adjoint().adjoint().distance_max(a)?;
    Ok(additive <= eps && scalar <= eps && product <= eps && involution <= eps)
}

/// Embeds a classical probability space and random variable into the
/// quantum formalism: X becomes the diagonal observable diag(X(ω₁),…,X(ωₙ))
/// and P becomes the state functional with trace form diag(P(ω₁),…,P(ωₙ)).
///
/// The functional's value on the observable equals the classical expected
/// value Σ P(ω)X(ω).
pub fn embed_classical<T: Scalar>(
    space: &FiniteProbabilitySpace<T>,
    x: &RandomVariable<T>,
) -> Result<(Matrix<T>, StateFunctional<T>)> {
    if space.size() != x.len() {
        return Err(Error::DimensionMismatch {
            left: space.size(),
            right: x.len(),
        });
    }
    let observable = Matrix::diagonal(x.values())?;
    let form = Matrix::diagonal(space.weights())?;
    // The weights are a validated probability vector, so the axioms hold by
    // construction; the trace tolerance matches the space's 1e-12 budget.
    let functional = StateFunctional::new(form, Tolerance::new(T::from_f64_lossy(1e-9))?)?;
    Ok((observable, functional))
}

/// What the witness found for a state and a pair of events.
#[derive(Debug, Clone, PartialEq)]
pub struct NonClassicalityReport<T> {
    /// ‖EF − FE‖_max.
    pub commutator_max_norm: T,
    pub prob_e: T,
    pub prob_f: T,
    /// Born probability of the projector onto Ran(E) + Ran(F).
    pub prob_join: T,
    /// True when the commutator norm exceeds tolerance: the pair generates a
    /// non-Boolean event lattice.
    pub non_boolean: bool,
}

/// Reports how far a pair of events is from behaving classically in the
/// given state: their commutator norm, the two Born probabilities, and the
/// probability of the joined subspace Ran(E) + Ran(F).
pub fn non_classicality_witness<T: Scalar>(
    z: &PureState<T>,
    e: &QuantumEvent<T>,
    f: &QuantumEvent<T>,
) -> Result<NonClassicalityReport<T>> {
    if e.dim() != f.dim() {
        return Err(Error::DimensionMismatch {
            left: e.dim(),
            right: f.dim(),
        });
    }
    if z.dim() != e.dim() {
        return Err(Error::DimensionMismatch {
            left: z.dim(),
            right: e.dim(),
        });
    }
    if e.dim() < 2 {
        return Err(Error::InvalidDimension {
            min: 2,
            got: e.dim(),
        });
    }
    let tol = Tolerance::<T>::default();
    let commutator_max_norm = e.matrix().commutator(f.matrix())?.norm_max();
    let prob_e = born_probability(e, z)?;
    let prob_f = born_probability(f, z)?;
    let join = join_projector(e.projector(), f.projector(), tol)?;
    let prob_join = born_probability(&QuantumEvent::new(join), z)?;
    Ok(NonClassicalityReport {
        commutator_max_norm,
        prob_e,
        prob_f,
        prob_join,
        non_boolean: commutator_max_norm > tol.eps(),
    })
}

/// Projector onto Ran(E) + Ran(F), computed from the spectral resolution of
/// the positive semidefinite sum E + F: the joined range is spanned by the
/// eigenvectors with distinctly nonzero eigenvalue.
fn join_projector<T: Scalar>(
    e: &OrthogonalProjector<T>,
    f: &OrthogonalProjector<T>,
    tol: Tolerance<T>,
) -> Result<OrthogonalProjector<T>> {
    let sum = e.matrix().add(f.matrix())?;
    let cutoff = spectral::default_cluster_tol(tol, sum.norm_fro());
    let n = sum.dim();
    let mut join = Matrix::zero(n);
    let mut rank = 0;
    for (value, vector) in spectral::eigh(&sum, tol)? {
        if value > cutoff {
            join = join.add(&vector.outer(&vector)?)?;
            rank += 1;
        }
    }
    if rank == 0 {
        // Both events are the zero projector; the join is zero too.
        return OrthogonalProjector::new(Matrix::zero(n), tol);
    }
    OrthogonalProjector::new(join, Tolerance::new(T::from_f64_lossy(1e-7))?)
}
