//! Finite classical probability: spaces, events, random variables, expected
//! values, characteristic functions, and the canonical form of simple
//! functions — the commutative mirror of the spectral resolution.
//!
//! Values of random variables are compared exactly (bit equality) when
//! forming level sets: these are set-theoretic constructions, not metric
//! ones. Callers wanting fuzzy grouping must pre-round.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::rng::SplitMix64;
use crate::scalar::Scalar;

/// Total-mass tolerance used when validating weights. Tighter than the
/// matrix tolerance since no iterative numerics are involved.
pub const WEIGHT_MASS_EPS: f64 = 1e-12;

/// Finite outcome set Ω with a probability weight per outcome.
///
/// Labels are part of the space's identity: the enumeration order fixes the
/// classical→quantum embedding.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteProbabilitySpace<T> {
    labels: Vec<String>,
    weights: Vec<T>,
}

impl<T: Scalar> FiniteProbabilitySpace<T> {
    /// Validates distinct labels, weights in [0,1], and total mass 1 within
    /// [`WEIGHT_MASS_EPS`].
    pub fn new(labels: Vec<String>, weights: Vec<T>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::InvalidSpace {
                reason: "outcome set must be nonempty".into(),
            });
        }
        if labels.len() != weights.len() {
            return Err(Error::InvalidSpace {
                reason: format!("{} labels but {} weights", labels.len(), weights.len()),
            });
        }
        let mut seen = BTreeSet::new();
        for label in &labels {
            if !seen.insert(label.as_str()) {
                return Err(Error::InvalidSpace {
                    reason: format!("duplicate outcome label {label:?}"),
                });
            }
        }
        let report = verify_axioms(&weights);
        if let Some(axiom) = report.first_violation {
            return Err(Error::InvalidSpace {
                reason: format!("{axiom:?} axiom fails: total mass {:?}", report.total_mass),
            });
        }
        Ok(Self { labels, weights })
    }

    /// Uniform space over `n` outcomes labeled `w0..w(n-1)`.
    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSpace {
                reason: "outcome set must be nonempty".into(),
            });
        }
        let w = T::one() / T::from_usize(n).expect("small n");
        Self::new((0..n).map(|k| format!("w{k}")).collect(), vec![w; n])
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    /// P(E) = Σ weights over the event's members.
    pub fn prob(&self, event: &Event) -> Result<T> {
        let n = self.size();
        let mut total = T::zero();
        for &k in event.indices() {
            if k >= n {
                return Err(Error::IndexOutOfRange { index: k, len: n });
            }
            total = total + self.weights[k];
        }
        Ok(total)
    }

    /// ⟨X⟩ = Σ P(ω)·X(ω).
    pub fn expected_value(&self, x: &RandomVariable<T>) -> Result<T> {
        if x.len() != self.size() {
            return Err(Error::DimensionMismatch {
                left: self.size(),
                right: x.len(),
            });
        }
        let mut total = T::zero();
        for (w, v) in self.weights.iter().zip(x.values()) {
            total = total + *w * *v;
        }
        Ok(total)
    }

    /// Indicator χ_E as a random variable: 1 on members, 0 elsewhere.
    pub fn characteristic(&self, event: &Event) -> Result<RandomVariable<T>> {
        let n = self.size();
        let mut values = vec![T::zero(); n];
        for &k in event.indices() {
            if k >= n {
                return Err(Error::IndexOutOfRange { index: k, len: n });
            }
            values[k] = T::one();
        }
        Ok(RandomVariable { values })
    }
}

/// Subset of outcome indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Event {
    indices: BTreeSet<usize>,
}

impl Event {
    pub fn empty() -> Self {
        Self {
            indices: BTreeSet::new(),
        }
    }

    pub fn from_indices(indices: &[usize]) -> Self {
        Self {
            indices: indices.iter().copied().collect(),
        }
    }

    /// The full set Ω for a space of `n` outcomes.
    pub fn full(n: usize) -> Self {
        Self {
            indices: (0..n).collect(),
        }
    }

    pub fn indices(&self) -> impl Iterator<Item = &usize> {
        self.indices.iter()
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, k: usize) -> bool {
        self.indices.contains(&k)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.indices.is_subset(&other.indices)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.indices.is_disjoint(&other.indices)
    }

    pub fn union(&self, other: &Self) -> Self {
        Self {
            indices: self.indices.union(&other.indices).copied().collect(),
        }
    }
}

/// Real-valued function on Ω, stored as its value at each outcome.
#[derive(Debug, Clone, PartialEq)]
pub struct RandomVariable<T> {
    values: Vec<T>,
}

impl<T: Scalar> RandomVariable<T> {
    pub fn new(values: Vec<T>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidDimension { min: 1, got: 0 });
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    /// Pointwise product XY; commutative by construction.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(Self {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| *a * *b)
                .collect(),
        })
    }

    /// SPEC(X) = Ran(X): the sorted distinct values.
    pub fn spectrum(&self) -> Vec<T> {
        self.canonical_form()
            .terms
            .iter()
            .map(|(v, _)| *v)
            .collect()
    }

    /// The canonical form X = Σ λⱼ·χ_{Λⱼ} over the distinct values of X and
    /// their level sets Λⱼ = X⁻¹(λⱼ). Values are compared exactly.
    pub fn canonical_form(&self) -> CanonicalForm<T> {
        let mut order: Vec<usize> = (0..self.values.len()).collect();
        order.sort_by(|&a, &b| {
            self.values[a]
                .partial_cmp(&self.values[b])
                .expect("values are finite")
        });
        let mut terms: Vec<(T, Event)> = Vec::new();
        for k in order {
            let v = self.values[k];
            match terms.last_mut() {
                Some((last, event)) if *last == v => {
                    event.indices.insert(k);
                }
                _ => {
                    terms.push((v, Event::from_indices(&[k])));
                }
            }
        }
        CanonicalForm { terms }
    }
}

/// X = Σ λⱼ·χ_{Λⱼ}: strictly increasing distinct values with pairwise
/// disjoint, nonempty level-set events whose union is Ω.
#[derive(Debug, Clone, PartialEq)]
pub struct CanonicalForm<T> {
    terms: Vec<(T, Event)>,
}

impl<T: Scalar> CanonicalForm<T> {
    pub fn terms(&self) -> &[(T, Event)] {
        &self.terms
    }

    pub fn values(&self) -> Vec<T> {
        self.terms.iter().map(|(v, _)| *v).collect()
    }

    /// Rebuilds the random variable; exact, since each outcome lies in
    /// exactly one level set.
    pub fn reconstruct(&self, n: usize) -> Result<RandomVariable<T>> {
        let mut values = vec![T::zero(); n];
        let mut filled = vec![false; n];
        for (v, event) in &self.terms {
            for &k in event.indices() {
                if k >= n {
                    return Err(Error::IndexOutOfRange { index: k, len: n });
                }
                if filled[k] {
                    return Err(Error::Internal(
                        "canonical form events must be disjoint".into(),
                    ));
                }
                values[k] = *v;
                filled[k] = true;
            }
        }
        if !filled.iter().all(|&f| f) {
            return Err(Error::Internal(
                "canonical form events must cover the space".into(),
            ));
        }
        RandomVariable::new(values)
    }
}

/// Axioms of a probability function on a finite space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProbabilityAxiom {
    /// Every weight lies in [0, 1].
    WeightBounds,
    /// Weights sum to 1.
    TotalMass,
    /// P is additive over disjoint unions.
    Additivity,
}

/// Outcome of [`verify_axioms`].
#[derive(Debug, Clone, PartialEq)]
pub struct AxiomReport<T> {
    pub total_mass: T,
    pub min_weight: T,
    pub max_weight: T,
    /// Largest |P(∪Eᵢ) − ΣP(Eᵢ)| over the generated disjoint families.
    pub max_additivity_error: T,
    pub first_violation: Option<ProbabilityAxiom>,
}

impl<T> AxiomReport<T> {
    pub fn pass(&self) -> bool {
        self.first_violation.is_none()
    }
}

const ADDITIVITY_TRIALS: usize = 16;
const ADDITIVITY_SEED: u64 = 0x4144_4449_5449_5645;

/// Checks raw weights against the probability axioms: bounds, total mass,
/// and finite additivity over a deterministic family of random disjoint
/// partitions. Operates on raw weights so invalid inputs can be diagnosed
/// before a space is ever constructed.
pub fn verify_axioms<T: Scalar>(weights: &[T]) -> AxiomReport<T> {
    let n = weights.len();
    let mass_eps = T::from_f64_lossy(WEIGHT_MASS_EPS);
    let mut min_weight = T::infinity();
    let mut max_weight = T::neg_infinity();
    let mut total_mass = T::zero();
    let mut finite = true;
    for &w in weights {
        finite &= w.is_finite();
        min_weight = min_weight.min(w);
        max_weight = max_weight.max(w);
        total_mass = total_mass + w;
    }

    let mut first_violation = None;
    if n == 0 || !finite || min_weight < T::zero() || max_weight > T::one() {
        first_violation = Some(ProbabilityAxiom::WeightBounds);
    } else if (total_mass - T::one()).abs() > mass_eps {
        first_violation = Some(ProbabilityAxiom::TotalMass);
    }

    // Finite additivity: assign each outcome to one of k blocks (or none)
    // and compare the union's mass against the block sums.
    let mut rng = SplitMix64::new(ADDITIVITY_SEED);
    let mut max_additivity_error = T::zero();
    if n > 0 && finite {
        for _ in 0..ADDITIVITY_TRIALS {
            let blocks = 2 + (rng.next_u64() % 4) as usize;
            let mut parts: Vec<T> = vec![T::zero(); blocks];
            let mut union = T::zero();
            for &w in weights {
                let slot = (rng.next_u64() % (blocks as u64 + 1)) as usize;
                if slot < blocks {
                    parts[slot] = parts[slot] + w;
                    union = union + w;
                }
            }
            let sum = parts.into_iter().fold(T::zero(), |acc, p| acc + p);
            max_additivity_error = max_additivity_error.max((sum - union).abs());
        }
        if first_violation.is_none() && max_additivity_error > mass_eps {
            first_violation = Some(ProbabilityAxiom::Additivity);
        }
    }

    AxiomReport {
        total_mass,
        min_weight,
        max_weight,
        max_additivity_error,
        first_violation,
    }
}
