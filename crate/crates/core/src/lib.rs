//! Finite-dimensional quantum probability toolkit.
//!
//! The pipeline runs from dense complex linear algebra through the spectral
//! theorem to Born-rule measurement, with finite classical probability as
//! the commutative special case:
//!
//! - [`linalg`] — vectors and matrices over ℂⁿ, adjoints, Pauli generators.
//! - [`spectral`] — Hermitian eigendecomposition (complex Jacobi) and the
//!   spectral resolution into eigenvalues and orthogonal projectors.
//! - [`quantum`] — events, pure states, Born probabilities, collapse,
//!   expected values, state functionals, and the classical embedding.
//! - [`classical`] — finite probability spaces, random variables, and the
//!   canonical form of simple functions.
//! - [`qubit`] — the n = 2 case and the Bloch sphere.
//! - [`io`] — the shared JSON wire formats.
//! - [`rng`] — the SplitMix64 generator behind reproducible sampling.
//!
//! Everything is generic over the real scalar via [`Scalar`] (`f32` or
//! `f64`); the `*64` aliases below are the concrete types most callers want.

pub mod classical;
pub mod error;
pub mod io;
pub mod linalg;
pub mod quantum;
pub mod qubit;
pub mod rng;
pub mod scalar;
pub mod spectral;

pub use error::{Error, Result};
pub use linalg::{Matrix, Tolerance, Vector};
pub use scalar::Scalar;

/// Complex double, the wire-format scalar.
pub type C64 = num_complex::Complex<f64>;
pub type C32 = num_complex::Complex<f32>;

pub type Vector64 = linalg::Vector<f64>;
pub type Matrix64 = linalg::Matrix<f64>;
pub type Tolerance64 = linalg::Tolerance<f64>;
pub type PureState64 = quantum::PureState<f64>;
pub type StateFunctional64 = quantum::StateFunctional<f64>;
pub type SpectralResolution64 = spectral::SpectralResolution<f64>;
pub type OrthogonalProjector64 = spectral::OrthogonalProjector<f64>;
pub type BlochVector64 = qubit::BlochVector<f64>;

pub type Vector32 = linalg::Vector<f32>;
pub type Matrix32 = linalg::Matrix<f32>;
pub type Tolerance32 = linalg::Tolerance<f32>;
