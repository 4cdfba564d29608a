//! JSON wire formats shared by all modules and consumed by the CLI.
//!
//! Matrices: `{"n": <int>, "rows": [[[re,im],...],...]}`. Vectors:
//! `{"n": <int>, "entries": [[re,im],...]}`. Numbers are decimal IEEE-754
//! doubles. Parsers reject wrong lengths.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::classical::{FiniteProbabilitySpace, RandomVariable};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::quantum::{MeasurementDistribution, StateFunctional};
use crate::qubit::BlochVector;
use crate::scalar::Scalar;
use crate::spectral::SpectralResolution;

/// `{"n":..., "rows":[[[re,im],...],...]}`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub n: usize,
    pub rows: Vec<Vec<(f64, f64)>>,
}

impl MatrixDoc {
    pub fn from_matrix<T: Scalar>(m: &Matrix<T>) -> Self {
        let n = m.dim();
        let rows = (0..n)
            .map(|j| {
                m.row(j)
                    .iter()
                    .map(|z| (to_f64(z.re), to_f64(z.im)))
                    .collect()
            })
            .collect();
        Self { n, rows }
    }

    pub fn to_matrix<T: Scalar>(&self) -> Result<Matrix<T>> {
        if self.rows.len() != self.n {
            return Err(Error::WrongLength {
                expected: self.n,
                got: self.rows.len(),
            });
        }
        let mut entries = Vec::with_capacity(self.n * self.n);
        for row in &self.rows {
            if row.len() != self.n {
                return Err(Error::WrongLength {
                    expected: self.n,
                    got: row.len(),
                });
            }
            for &(re, im) in row {
                entries.push(Complex::new(from_f64::<T>(re)?, from_f64::<T>(im)?));
            }
        }
        Matrix::new(self.n, entries)
    }
}

/// `{"n":..., "entries":[[re,im],...]}`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VectorDoc {
    pub n: usize,
    pub entries: Vec<(f64, f64)>,
}

impl VectorDoc {
    pub fn from_vector<T: Scalar>(v: &Vector<T>) -> Self {
        Self {
            n: v.dim(),
            entries: v
                .entries()
                .iter()
                .map(|z| (to_f64(z.re), to_f64(z.im)))
                .collect(),
        }
    }

    pub fn to_vector<T: Scalar>(&self) -> Result<Vector<T>> {
        if self.entries.len() != self.n {
            return Err(Error::WrongLength {
                expected: self.n,
                got: self.entries.len(),
            });
        }
        let entries = self
            .entries
            .iter()
            .map(|&(re, im)| Ok(Complex::new(from_f64::<T>(re)?, from_f64::<T>(im)?)))
            .collect::<Result<Vec<_>>>()?;
        Vector::new(entries)
    }
}

/// `{"n":..., "terms":[{"value":...,"projector":<matrix>},...]}`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResolutionDoc {
    pub n: usize,
    pub terms: Vec<ResolutionTermDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResolutionTermDoc {
    pub value: f64,
    pub projector: MatrixDoc,
}

impl ResolutionDoc {
    pub fn from_resolution<T: Scalar>(r: &SpectralResolution<T>) -> Self {
        Self {
            n: r.dim(),
            terms: r
                .terms()
                .iter()
                .map(|(value, projector)| ResolutionTermDoc {
                    value: to_f64(*value),
                    projector: MatrixDoc::from_matrix(projector.matrix()),
                })
                .collect(),
        }
    }
}

/// `{"outcomes":[{"value":...,"prob":...,"post":<vector|null>},...]}`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DistributionDoc {
    pub outcomes: Vec<OutcomeDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutcomeDoc {
    pub value: f64,
    pub prob: f64,
    pub post: Option<VectorDoc>,
}

impl DistributionDoc {
    pub fn from_distribution<T: Scalar>(d: &MeasurementDistribution<T>) -> Self {
        Self {
            outcomes: d
                .outcomes()
                .iter()
                .map(|o| OutcomeDoc {
                    value: to_f64(o.value),
                    prob: to_f64(o.probability),
                    post: o
                        .post_state
                        .as_ref()
                        .map(|z| VectorDoc::from_vector(z.vector())),
                })
                .collect(),
        }
    }
}

/// `{"x":...,"y":...,"z":...}`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BlochDoc {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl BlochDoc {
    pub fn from_bloch<T: Scalar>(b: &BlochVector<T>) -> Self {
        Self {
            x: to_f64(b.x),
            y: to_f64(b.y),
            z: to_f64(b.z),
        }
    }

    pub fn to_bloch<T: Scalar>(&self) -> Result<BlochVector<T>> {
        Ok(BlochVector::new(
            from_f64::<T>(self.x)?,
            from_f64::<T>(self.y)?,
            from_f64::<T>(self.z)?,
        ))
    }
}

/// `{"labels":[...], "weights":[...]}`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpaceDoc {
    pub labels: Vec<String>,
    pub weights: Vec<f64>,
}

impl SpaceDoc {
    pub fn from_space<T: Scalar>(space: &FiniteProbabilitySpace<T>) -> Self {
        Self {
            labels: space.labels().to_vec(),
            weights: space.weights().iter().map(|&w| to_f64(w)).collect(),
        }
    }

    pub fn to_space<T: Scalar>(&self) -> Result<FiniteProbabilitySpace<T>> {
        let weights = self
            .weights
            .iter()
            .map(|&w| from_f64::<T>(w))
            .collect::<Result<Vec<_>>>()?;
        FiniteProbabilitySpace::new(self.labels.clone(), weights)
    }
}

/// `{"values":[...]}`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RandomVariableDoc {
    pub values: Vec<f64>,
}

impl RandomVariableDoc {
    pub fn from_variable<T: Scalar>(x: &RandomVariable<T>) -> Self {
        Self {
            values: x.values().iter().map(|&v| to_f64(v)).collect(),
        }
    }

    pub fn to_variable<T: Scalar>(&self) -> Result<RandomVariable<T>> {
        let values = self
            .values
            .iter()
            .map(|&v| from_f64::<T>(v))
            .collect::<Result<Vec<_>>>()?;
        RandomVariable::new(values)
    }
}

impl<T: Scalar> StateFunctional<T> {
    /// Trace form in the shared matrix format.
    pub fn to_doc(&self) -> MatrixDoc {
        MatrixDoc::from_matrix(self.form())
    }
}

fn to_f64<T: Scalar>(x: T) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

fn from_f64<T: Scalar>(x: f64) -> Result<T> {
    if !x.is_finite() {
        return Err(Error::NonFinite);
    }
    T::from_f64(x).ok_or(Error::NonFinite)
}
