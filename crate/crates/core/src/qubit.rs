//! The n = 2 system: qubit states, Bloch-sphere coordinates, spin-½
//! observables, and the bit-vs-qubit contrast.
//!
//! The identification of phase classes of unit vectors in ℂ² with points of
//! the 2-sphere is realized concretely through Pauli expectations: a state z
//! maps to (⟨σ₁⟩_z, ⟨σ₂⟩_z, ⟨σ₃⟩_z).

use num_complex::Complex;

use crate::classical::FiniteProbabilitySpace;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Tolerance};
use crate::quantum::{expected_value, PureState};
use crate::scalar::Scalar;

/// Point of the Bloch sphere; unit norm for pure states.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Scalar> BlochVector<T> {
    pub fn new(x: T, y: T, z: T) -> Self {
        Self { x, y, z }
    }

    pub fn norm(&self) -> T {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    pub fn distance(&self, other: &Self) -> T {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        let dz = self.z - other.z;
        (dx * dx + dy * dy + dz * dz).sqrt()
    }
}

/// Bloch coordinates (⟨σ₁⟩, ⟨σ₂⟩, ⟨σ₃⟩) of a qubit state.
///
/// Phase-equivalent states map to the same point; the image has unit norm.
pub fn bloch<T: Scalar>(z: &PureState<T>) -> Result<BlochVector<T>> {
    if z.dim() != 2 {
        return Err(Error::DimensionMismatch {
            left: z.dim(),
            right: 2,
        });
    }
    let x = expected_value(&Matrix::pauli(1)?, z)?;
    let y = expected_value(&Matrix::pauli(2)?, z)?;
    let w = expected_value(&Matrix::pauli(3)?, z)?;
    Ok(BlochVector::new(x, y, w))
}

/// The state (cos(θ/2), e^{iφ}·sin(θ/2)) with θ = arccos(b_z) and
/// φ = atan2(b_y, b_x): a section of the quotient map, fixing the first
/// component real nonnegative.
pub fn from_bloch<T: Scalar>(b: &BlochVector<T>, tol: Tolerance<T>) -> Result<PureState<T>> {
    let norm = b.norm();
    if (norm - T::one()).abs() > tol.eps() {
        return Err(Error::NotUnitBloch {
            norm: norm.to_f64().unwrap_or(f64::NAN),
        });
    }
    let z_clamped = b.z.max(-T::one()).min(T::one());
    let theta = z_clamped.acos();
    let phi = b.y.atan2(b.x);
    let half = theta / (T::one() + T::one());
    let amp0 = half.cos();
    let amp1 = half.sin();
    let vector = crate::linalg::Vector::new(vec![
        Complex::new(amp0, T::zero()),
        Complex::new(phi.cos() * amp1, phi.sin() * amp1),
    ])?;
    PureState::normalized(&vector)
}

/// The two-outcome classical space Ω = {↑, ↓} with the given weights: two
/// extreme points, against the sphere of qubit states.
pub fn classical_bits<T: Scalar>(up: T, down: T) -> Result<FiniteProbabilitySpace<T>> {
    FiniteProbabilitySpace::new(vec!["↑".into(), "↓".into()], vec![up, down])
}

/// Spin-½ component observable ½·σₖ along axis k ∈ {1,2,3}.
///
/// Its spectral resolution has eigenvalues ±½ with projectors ½(I ± σₖ).
pub fn spin_observable<T: Scalar>(k: usize) -> Result<Matrix<T>> {
    Ok(Matrix::pauli(k)?.scale_real(T::from_f64_lossy(0.5)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Vector;
    use crate::quantum::measure;
    use crate::rng::SplitMix64;
    use crate::spectral::spectral_resolution;
    use proptest::prelude::*;

    type C = Complex<f64>;

    fn c(re: f64, im: f64) -> C {
        Complex::new(re, im)
    }

    fn tol() -> Tolerance<f64> {
        Tolerance::default()
    }

    fn state(entries: Vec<C>) -> PureState<f64> {
        PureState::normalized(&Vector::new(entries).unwrap()).unwrap()
    }

    #[test]
    fn north_pole() {
        let b = bloch(&state(vec![c(1.0, 0.0), c(0.0, 0.0)])).unwrap();
        assert!(b.distance(&BlochVector::new(0.0, 0.0, 1.0)) <= 1e-12);
    }

    #[test]
    fn plus_x_axis() {
        let b = bloch(&state(vec![c(1.0, 0.0), c(1.0, 0.0)])).unwrap();
        assert!(b.distance(&BlochVector::new(1.0, 0.0, 0.0)) <= 1e-12);
    }

    #[test]
    fn south_pole() {
        let b = bloch(&state(vec![c(0.0, 0.0), c(1.0, 0.0)])).unwrap();
        assert!(b.distance(&BlochVector::new(0.0, 0.0, -1.0)) <= 1e-12);
    }

    #[test]
    fn bloch_rejects_wrong_dimension() {
        let z = state(vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        assert!(matches!(bloch(&z), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn from_bloch_poles_and_equator() {
        let north = from_bloch(&BlochVector::new(0.0, 0.0, 1.0), tol()).unwrap();
        assert!(north
            .phase_eq(&state(vec![c(1.0, 0.0), c(0.0, 0.0)]), tol())
            .unwrap());

        let south = from_bloch(&BlochVector::new(0.0, 0.0, -1.0), tol()).unwrap();
        assert!(south
            .phase_eq(&state(vec![c(0.0, 0.0), c(1.0, 0.0)]), tol())
            .unwrap());

        let east = from_bloch(&BlochVector::new(1.0, 0.0, 0.0), tol()).unwrap();
        assert!(east
            .phase_eq(&state(vec![c(1.0, 0.0), c(1.0, 0.0)]), tol())
            .unwrap());
    }

    #[test]
    fn from_bloch_rejects_non_unit_vectors() {
        assert!(matches!(
            from_bloch(&BlochVector::new(0.5, 0.0, 0.0), tol()),
            Err(Error::NotUnitBloch { .. })
        ));
    }

    #[test]
    fn classical_bits_examples() {
        let uniform = classical_bits(0.5, 0.5).unwrap();
        assert_eq!(uniform.labels(), &["↑".to_string(), "↓".to_string()]);
        assert_eq!(uniform.weights(), &[0.5, 0.5]);
        assert_eq!(classical_bits(1.0, 0.0).unwrap().weights(), &[1.0, 0.0]);
        assert_eq!(classical_bits(0.0, 1.0).unwrap().weights(), &[0.0, 1.0]);
    }

    #[test]
    fn spin_observables_resolve_into_half_projectors() {
        for k in 1..=3 {
            let s = spin_observable::<f64>(k).unwrap();
            let r = spectral_resolution(&s, tol()).unwrap();
            assert_eq!(r.terms().len(), 2);
            assert!((r.terms()[0].0 + 0.5).abs() <= 1e-12);
            assert!((r.terms()[1].0 - 0.5).abs() <= 1e-12);
            // Projectors are ½(I ± σₖ).
            let pauli = Matrix::<f64>::pauli(k).unwrap();
            let id = Matrix::<f64>::identity(2);
            let plus = id.add(&pauli).unwrap().scale_real(0.5);
            let minus = id.sub(&pauli).unwrap().scale_real(0.5);
            assert!(r.terms()[1].1.matrix().distance_max(&plus).unwrap() <= 1e-12);
            assert!(r.terms()[0].1.matrix().distance_max(&minus).unwrap() <= 1e-12);
        }
    }

    #[test]
    fn spin3_projectors_are_diagonal() {
        let r = spectral_resolution(&spin_observable::<f64>(3).unwrap(), tol()).unwrap();
        let e_minus = Matrix::diagonal(&[0.0, 1.0]).unwrap();
        let e_plus = Matrix::diagonal(&[1.0, 0.0]).unwrap();
        assert!(r.terms()[0].1.matrix().distance_max(&e_minus).unwrap() <= 1e-12);
        assert!(r.terms()[1].1.matrix().distance_max(&e_plus).unwrap() <= 1e-12);
    }

    fn random_unit_bloch(rng: &mut SplitMix64) -> BlochVector<f64> {
        // Uniform on the sphere: z uniform in [-1,1], azimuth uniform.
        let z = rng.next_symmetric();
        let phi = rng.next_f64() * std::f64::consts::TAU;
        let r = (1.0 - z * z).max(0.0).sqrt();
        BlochVector::new(r * phi.cos(), r * phi.sin(), z)
    }

    #[test]
    fn round_trip_on_random_sphere_points() {
        let mut rng = SplitMix64::new(0xB10C);
        for _ in 0..500 {
            let b = random_unit_bloch(&mut rng);
            let z = from_bloch(&b, tol()).unwrap();
            let back = bloch(&z).unwrap();
            assert!(back.distance(&b) <= 1e-10);
        }
    }

    #[test]
    fn antipodal_states_are_orthogonal() {
        let mut rng = SplitMix64::new(0xA211);
        for _ in 0..200 {
            let b = random_unit_bloch(&mut rng);
            let anti = BlochVector::new(-b.x, -b.y, -b.z);
            let z = from_bloch(&b, tol()).unwrap();
            let w = from_bloch(&anti, tol()).unwrap();
            let overlap = z.vector().inner(w.vector()).unwrap().norm();
            assert!(overlap <= 1e-9);
        }
    }

    #[test]
    fn spin_measurement_probabilities_match_bloch_coordinates() {
        let mut rng = SplitMix64::new(0x5127);
        for _ in 0..100 {
            let b = random_unit_bloch(&mut rng);
            let z = from_bloch(&b, tol()).unwrap();
            let coords = [b.x, b.y, b.z];
            for k in 1..=3 {
                let d = measure(&spin_observable::<f64>(k).unwrap(), &z, tol()).unwrap();
                let outcomes = d.outcomes();
                assert_eq!(outcomes.len(), 2);
                assert!((outcomes[0].value + 0.5).abs() <= 1e-12);
                assert!((outcomes[1].value - 0.5).abs() <= 1e-12);
                let expect_minus = (1.0 - coords[k - 1]) / 2.0;
                let expect_plus = (1.0 + coords[k - 1]) / 2.0;
                assert!((outcomes[0].probability - expect_minus).abs() <= 1e-9);
                assert!((outcomes[1].probability - expect_plus).abs() <= 1e-9);
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn phase_class_injectivity(seed in any::<u64>()) {
            let mut rng = SplitMix64::new(seed);
            let b1 = random_unit_bloch(&mut rng);
            let b2 = random_unit_bloch(&mut rng);
            let z1 = from_bloch(&b1, tol()).unwrap();
            let z2 = from_bloch(&b2, tol()).unwrap();
            let same_point = b1.distance(&b2) <= 1e-9;
            let same_class = z1.phase_eq(&z2, Tolerance::new(1e-9).unwrap()).unwrap();
            // Identical points give identical classes; clearly distinct
            // points give distinct classes.
            if same_point {
                prop_assert!(same_class);
            }
            if b1.distance(&b2) > 1e-3 {
                prop_assert!(!same_class);
            }
        }
    }
}
