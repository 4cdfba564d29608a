//! Acceptance suite: one test per criterion, each printing a pass line with
//! the measured quantities (visible with `--nocapture`). Tolerances are
//! pinned in the assertions.

use std::fs;
use std::process::Command;
use std::time::Instant;

use qprob_core::classical::{FiniteProbabilitySpace, RandomVariable};
use qprob_core::linalg::{Matrix, Tolerance, Vector};
use qprob_core::quantum::{
    embed_classical, expected_value, measure, non_classicality_witness, pure_state_functional,
    verify_state, PureState, QuantumEvent,
};
use qprob_core::qubit::{bloch, from_bloch, spin_observable, BlochVector};
use qprob_core::rng::SplitMix64;
use qprob_core::spectral::{spectral_resolution, OrthogonalProjector};
use qprob_core::{Matrix64, C64};

fn tol() -> Tolerance<f64> {
    Tolerance::default()
}

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn random_complex(rng: &mut SplitMix64) -> C64 {
    c(rng.next_symmetric(), rng.next_symmetric())
}

fn random_hermitian(rng: &mut SplitMix64, n: usize) -> Matrix64 {
    let entries: Vec<C64> = (0..n * n).map(|_| random_complex(rng)).collect();
    let m = Matrix::new(n, entries).unwrap();
    m.add(&m.adjoint()).unwrap().scale_real(0.5)
}

fn random_state(rng: &mut SplitMix64, n: usize) -> PureState<f64> {
    loop {
        let entries: Vec<C64> = (0..n).map(|_| random_complex(rng)).collect();
        let v = Vector::new(entries).unwrap();
        if v.norm() > 1e-3 {
            return PureState::normalized(&v).unwrap();
        }
    }
}

fn random_space_and_variable(
    rng: &mut SplitMix64,
    max_n: usize,
) -> (FiniteProbabilitySpace<f64>, RandomVariable<f64>) {
    let n = 1 + (rng.next_u64() as usize) % max_n;
    let raw: Vec<f64> = (0..n).map(|_| rng.next_f64() + 1e-3).collect();
    let total: f64 = raw.iter().sum();
    let weights: Vec<f64> = raw.iter().map(|w| w / total).collect();
    let labels: Vec<String> = (0..n).map(|k| format!("w{k}")).collect();
    let space = FiniteProbabilitySpace::new(labels, weights).unwrap();
    // Quarter-integer values: distinct values are separated far beyond the
    // spectral clustering tolerance.
    let values: Vec<f64> = (0..n)
        .map(|_| ((rng.next_u64() % 41) as f64 - 20.0) / 4.0)
        .collect();
    (space, RandomVariable::new(values).unwrap())
}

#[test]
fn criterion_01_pauli_algebra() {
    let started = Instant::now();
    let s1 = Matrix64::pauli(1).unwrap();
    let s2 = Matrix64::pauli(2).unwrap();
    let s3 = Matrix64::pauli(3).unwrap();
    let i = c(0.0, 1.0);
    let table = [
        (&s1, &s2, s3.scale(i)),
        (&s2, &s1, s3.scale(-i)),
        (&s2, &s3, s1.scale(i)),
        (&s3, &s2, s1.scale(-i)),
        (&s3, &s1, s2.scale(i)),
        (&s1, &s3, s2.scale(-i)),
    ];
    let mut worst = 0.0f64;
    for (a, b, expected) in &table {
        let d = a.matmul(b).unwrap().distance_max(expected).unwrap();
        worst = worst.max(d);
    }
    for s in [&s1, &s2, &s3] {
        let d = s
            .matmul(s)
            .unwrap()
            .distance_max(&Matrix64::identity(2))
            .unwrap();
        worst = worst.max(d);
    }
    let elapsed = started.elapsed();
    assert!(worst <= 1e-12, "worst deviation {worst:e}");
    assert!(elapsed.as_secs_f64() < 1e-3, "took {elapsed:?}");
    println!("criterion 01 pauli algebra: PASS (worst entry deviation {worst:e}, {elapsed:?})");
}

#[test]
fn criterion_02_spectral_theorem_random_hermitian() {
    let started = Instant::now();
    let mut rng = SplitMix64::new(0x0202_0202);
    let mut worst_orth = 0.0f64;
    let mut worst_sum = 0.0f64;
    let mut worst_recon = 0.0f64;
    for n in 1..=16 {
        for _ in 0..1000 {
            let a = random_hermitian(&mut rng, n);
            let bound = 1e-8 * a.norm_max().max(1.0);
            let r = spectral_resolution(&a, tol()).unwrap();
            let mut sum = Matrix64::zero(n);
            for (i, (_, ei)) in r.terms().iter().enumerate() {
                sum = sum.add(ei.matrix()).unwrap();
                for (_, ej) in r.terms().iter().skip(i + 1) {
                    let prod = ei.matrix().matmul(ej.matrix()).unwrap().norm_max();
                    worst_orth = worst_orth.max(prod);
                    assert!(prod <= bound, "E_i E_j = {prod:e} at n={n}");
                }
            }
            let sum_dev = sum.distance_max(&Matrix64::identity(n)).unwrap();
            worst_sum = worst_sum.max(sum_dev);
            assert!(sum_dev <= bound, "sum E - I = {sum_dev:e} at n={n}");
            let recon = r.reconstruct().distance_max(&a).unwrap();
            worst_recon = worst_recon.max(recon);
            assert!(recon <= bound, "reconstruction {recon:e} at n={n}");
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 30.0, "took {elapsed:?}");
    println!(
        "criterion 02 spectral theorem: PASS (16000 matrices; worst orth {worst_orth:e}, \
         worst completeness {worst_sum:e}, worst reconstruction {worst_recon:e}, {elapsed:?})"
    );
}

#[test]
fn criterion_03_born_normalization() {
    let mut rng = SplitMix64::new(0x0303_0303);
    let mut worst_sum_dev = 0.0f64;
    let mut worst_range = 0.0f64;
    for trial in 0..1000 {
        let n = 2 + trial % 7;
        let a = random_hermitian(&mut rng, n);
        let z = random_state(&mut rng, n);
        let r = spectral_resolution(&a, tol()).unwrap();
        // Raw pre-clamp Born terms via the direct bracket route.
        let mut total = 0.0;
        for (_, projector) in r.terms() {
            let ez = projector.matrix().apply(z.vector()).unwrap();
            let raw = z.vector().inner(&ez).unwrap().re;
            assert!(
                (-1e-9..=1.0 + 1e-9).contains(&raw),
                "pre-clamp term {raw} out of range"
            );
            worst_range = worst_range.max((-raw).max(raw - 1.0).max(0.0));
            total += raw;
        }
        worst_sum_dev = worst_sum_dev.max((total - 1.0).abs());
        assert!(
            (total - 1.0).abs() <= 1e-9,
            "probabilities sum to {total} at n={n}"
        );
    }
    println!(
        "criterion 03 born normalization: PASS (1000 pairs; worst sum deviation \
         {worst_sum_dev:e}, worst range excursion {worst_range:e})"
    );
}

#[test]
fn criterion_04_expectation_consistency() {
    let mut rng = SplitMix64::new(0x0404_0404);
    let mut worst = 0.0f64;
    for trial in 0..1000 {
        let n = 2 + trial % 7;
        let a = random_hermitian(&mut rng, n);
        let z = random_state(&mut rng, n);
        let direct = expected_value(&a, &z).unwrap();
        let d = measure(&a, &z, tol()).unwrap();
        let weighted: f64 = d.outcomes().iter().map(|o| o.value * o.probability).sum();
        let dev = (direct - weighted).abs();
        worst = worst.max(dev);
        assert!(dev <= 1e-8, "deviation {dev:e} at n={n}");
    }
    println!("criterion 04 expectation consistency: PASS (1000 pairs; worst {worst:e})");
}

#[test]
fn criterion_05_classical_quantum_oracle_equivalence() {
    let mut rng = SplitMix64::new(0x0505_0505);
    let mut worst_expect = 0.0f64;
    let mut worst_value = 0.0f64;
    for _ in 0..1000 {
        let (space, x) = random_space_and_variable(&mut rng, 8);
        let classical = space.expected_value(&x).unwrap();
        let (observable, functional) = embed_classical(&space, &x).unwrap();
        let quantum = functional.evaluate(&observable).unwrap().re;
        let dev = (classical - quantum).abs();
        worst_expect = worst_expect.max(dev);
        assert!(dev <= 1e-12, "expectation deviation {dev:e}");

        let spectrum = x.spectrum();
        let resolution = spectral_resolution(&observable, tol()).unwrap();
        let embedded: Vec<f64> = resolution.values().collect();
        assert_eq!(spectrum.len(), embedded.len());
        for (a, b) in spectrum.iter().zip(&embedded) {
            let dev = (a - b).abs();
            worst_value = worst_value.max(dev);
            assert!(dev <= 1e-10, "spectral value deviation {dev:e}");
        }
    }
    println!(
        "criterion 05 classical-quantum oracle: PASS (1000 spaces; worst expectation \
         deviation {worst_expect:e}, worst spectral value deviation {worst_value:e})"
    );
}

#[test]
fn criterion_06_canonical_form_exactness() {
    let mut rng = SplitMix64::new(0x0606_0606);
    for _ in 0..10_000 {
        let n = 1 + (rng.next_u64() as usize) % 12;
        let values: Vec<f64> = (0..n)
            .map(|_| ((rng.next_u64() % 21) as i64 - 10) as f64)
            .collect();
        let x = RandomVariable::new(values).unwrap();
        let cf = x.canonical_form();
        // Bit-equal reconstruction.
        let rebuilt = cf.reconstruct(n).unwrap();
        assert_eq!(rebuilt, x);
        // Events partition the space: disjoint, nonempty, exhaustive.
        let mut seen = vec![false; n];
        for (value, event) in cf.terms() {
            assert!(!event.is_empty());
            assert!(value.fract() == 0.0);
            for &k in event.indices() {
                assert!(!seen[k], "events overlap at index {k}");
                seen[k] = true;
            }
        }
        assert!(seen.iter().all(|&s| s));
        for pair in cf.terms().windows(2) {
            assert!(pair[0].0 < pair[1].0);
        }
    }
    println!("criterion 06 canonical form exactness: PASS (10000 variables, bit-equal)");
}

#[test]
fn criterion_07_qubit_suite() {
    let mut rng = SplitMix64::new(0x0707_0707);
    let mut worst_round = 0.0f64;
    let mut worst_prob = 0.0f64;
    let mut worst_overlap = 0.0f64;
    let spins: Vec<Matrix64> = (1..=3).map(|k| spin_observable(k).unwrap()).collect();
    for _ in 0..10_000 {
        // Uniform on the sphere.
        let zc = rng.next_symmetric();
        let phi = rng.next_f64() * std::f64::consts::TAU;
        let r = (1.0 - zc * zc).max(0.0).sqrt();
        let b = BlochVector::new(r * phi.cos(), r * phi.sin(), zc);

        let state = from_bloch(&b, tol()).unwrap();
        let back = bloch(&state).unwrap();
        let dev = back.distance(&b);
        worst_round = worst_round.max(dev);
        assert!(dev <= 1e-8, "round trip deviation {dev:e}");

        let coords = [b.x, b.y, b.z];
        for (k, spin) in spins.iter().enumerate() {
            let d = measure(spin, &state, tol()).unwrap();
            let outcomes = d.outcomes();
            assert_eq!(outcomes.len(), 2);
            assert!((outcomes[0].value + 0.5).abs() <= 1e-12);
            assert!((outcomes[1].value - 0.5).abs() <= 1e-12);
            let minus_dev = (outcomes[0].probability - (1.0 - coords[k]) / 2.0).abs();
            let plus_dev = (outcomes[1].probability - (1.0 + coords[k]) / 2.0).abs();
            worst_prob = worst_prob.max(minus_dev).max(plus_dev);
            assert!(minus_dev <= 1e-9 && plus_dev <= 1e-9);
        }

        let anti = from_bloch(&BlochVector::new(-b.x, -b.y, -b.z), tol()).unwrap();
        let overlap = state.vector().inner(anti.vector()).unwrap().norm();
        worst_overlap = worst_overlap.max(overlap);
        assert!(overlap <= 1e-9, "antipodal overlap {overlap:e}");
    }
    println!(
        "criterion 07 qubit suite: PASS (10000 points; worst round trip {worst_round:e}, \
         worst spin probability deviation {worst_prob:e}, worst antipodal overlap \
         {worst_overlap:e})"
    );
}

#[test]
fn criterion_08_sampler_statistics() {
    // In-process: statistics and runtime.
    let plus =
        PureState::normalized(&Vector::new(vec![c(1.0, 0.0), c(1.0, 0.0)]).unwrap()).unwrap();
    let distribution = measure(&Matrix64::pauli(3).unwrap(), &plus, tol()).unwrap();
    let started = Instant::now();
    let report = qprob_cli::sample_distribution(&distribution, 100_000, 42, "sigma3", "plus");
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "sampling took {elapsed:?}");
    let bound = 3.0 * (0.25f64 / 100_000.0).sqrt();
    let mut worst = 0.0f64;
    for outcome in &report.outcomes {
        let dev = (outcome.empirical_freq - 0.5).abs();
        worst = worst.max(dev);
        assert!(
            dev <= bound,
            "|freq - 1/2| = {dev} exceeds 3 sigma = {bound}"
        );
        assert!(outcome.z_score.unwrap().abs() <= 5.0);
    }
    let total: u64 = report.outcomes.iter().map(|o| o.count).sum();
    assert_eq!(total, 100_000);

    // Through the binary: byte-identical reports across two runs.
    let dir = tempfile::TempDir::new().unwrap();
    let obs = dir.path().join("sigma3.json");
    fs::write(&obs, r#"{"n":2,"rows":[[[1,0],[0,0]],[[0,0],[-1,0]]]}"#).unwrap();
    let state = dir.path().join("plus.json");
    fs::write(
        &state,
        r#"{"n":2,"entries":[[0.7071067811865476,0],[0.7071067811865476,0]]}"#,
    )
    .unwrap();
    let run = || {
        let out = Command::new(env!("CARGO_BIN_EXE_qprob"))
            .arg("sample")
            .arg(&obs)
            .arg(&state)
            .args(["--n", "100000", "--seed", "42"])
            .output()
            .unwrap();
        assert!(out.status.success());
        out.stdout
    };
    let first = run();
    let second = run();
    assert_eq!(first, second, "reports differ between runs");
    println!(
        "criterion 08 sampler statistics: PASS (worst |freq-1/2| = {worst:e} <= {bound:e}, \
         byte-identical reports, {elapsed:?})"
    );
}

#[test]
fn criterion_09_state_functional_axioms() {
    let mut rng = SplitMix64::new(0x0909_0909);
    let mut worst = f64::INFINITY;
    for trial in 0..1000 {
        let n = 2 + trial % 4;
        let z = random_state(&mut rng, n);
        let functional = pure_state_functional(&z);
        let diag = verify_state(functional.form(), tol());
        assert!(diag.pass(), "axioms failed: {diag:?}");
        for _ in 0..100 {
            let entries: Vec<C64> = (0..n * n).map(|_| random_complex(&mut rng)).collect();
            let m = Matrix::new(n, entries).unwrap();
            let mm = m.adjoint().matmul(&m).unwrap();
            let value = functional.evaluate(&mm).unwrap().re;
            worst = worst.min(value);
            assert!(value >= -1e-9, "rho(M*M) = {value:e}");
        }
    }
    println!(
        "criterion 09 state-functional axioms: PASS (1000 states x 100 operands; \
         min rho(M*M) = {worst:e})"
    );
}

#[test]
fn criterion_10_non_classicality_witness() {
    // E = ½(I+σ₃), F = ½(I+σ₁).
    let id = Matrix64::identity(2);
    let e = id
        .add(&Matrix64::pauli(3).unwrap())
        .unwrap()
        .scale_real(0.5);
    let f = id
        .add(&Matrix64::pauli(1).unwrap())
        .unwrap()
        .scale_real(0.5);
    let e = QuantumEvent::new(OrthogonalProjector::new(e, tol()).unwrap());
    let f = QuantumEvent::new(OrthogonalProjector::new(f, tol()).unwrap());
    let z = PureState::new(Vector::basis(2, 0).unwrap(), tol()).unwrap();
    let report = non_classicality_witness(&z, &e, &f).unwrap();
    let dev = (report.commutator_max_norm - 0.5).abs();
    assert!(dev <= 1e-12, "commutator norm deviation {dev:e}");
    assert!(report.non_boolean);
    println!(
        "criterion 10 non-classicality witness: PASS (commutator max norm {} within 1e-12 of 1/2)",
        report.commutator_max_norm
    );
}
