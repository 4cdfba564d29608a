//! Subcommand implementations. Each returns the JSON to print, or a
//! [`CliError`] carrying the exit code: 2 for input/contract problems,
//! 3 for mathematical-validity problems.

use std::fmt;
use std::fs;
use std::path::Path;

use serde::Serialize;

use qprob_core::io::{
    BlochDoc, DistributionDoc, MatrixDoc, RandomVariableDoc, ResolutionDoc, SpaceDoc, VectorDoc,
};
use qprob_core::quantum::{embed_classical, measure, PureState};
use qprob_core::spectral::spectral_resolution;
use qprob_core::{classical, qubit, Matrix64, Tolerance64, Vector64};

use crate::sampler::sample_distribution;

/// Largest |‖z‖ − 1| the state loader will silently repair (with a warning);
/// beyond this the state file is rejected.
pub const RENORMALIZE_THRESHOLD: f64 = 1e-6;

#[derive(Debug)]
pub enum CliError {
    /// Exit code 2: unreadable/unparseable input or contract violation.
    Input(String),
    /// Exit code 3: input parsed but is mathematically invalid.
    Math(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Math(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) => write!(f, "input error: {msg}"),
            CliError::Math(msg) => write!(f, "validity error: {msg}"),
        }
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let raw = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&raw)
        .map_err(|e| CliError::Input(format!("cannot parse {}: {e}", path.display())))
}

fn load_matrix(path: &Path) -> Result<Matrix64, CliError> {
    let doc: MatrixDoc = read_json(path)?;
    doc.to_matrix()
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Loads a state vector, renormalizing within [`RENORMALIZE_THRESHOLD`]
/// (warning on stderr) and rejecting anything further from unit norm.
fn load_state(path: &Path, tol: Tolerance64) -> Result<PureState<f64>, CliError> {
    let doc: VectorDoc = read_json(path)?;
    let vector: Vector64 = doc
        .to_vector()
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let norm = vector.norm();
    let drift = (norm - 1.0).abs();
    if drift > RENORMALIZE_THRESHOLD {
        return Err(CliError::Math(format!(
            "state in {} is not normalizable: |z| = {norm:e}",
            path.display()
        )));
    }
    if drift > tol.eps() {
        eprintln!(
            "warning: renormalizing state in {} (|z| = {norm}, drift {drift:e})",
            path.display()
        );
    }
    PureState::normalized(&vector).map_err(|e| CliError::Math(format!("{}: {e}", path.display())))
}

fn ensure_hermitian(a: &Matrix64, tol: Tolerance64, path: &Path) -> Result<(), CliError> {
    let asymmetry = a.asymmetry();
    if asymmetry > tol.eps() {
        return Err(CliError::Math(format!(
            "matrix in {} is not Hermitian: max asymmetry {asymmetry:e}",
            path.display()
        )));
    }
    Ok(())
}

fn ensure_same_dim(a: usize, b: usize) -> Result<(), CliError> {
    if a != b {
        return Err(CliError::Input(format!("dimension mismatch: {a} vs {b}")));
    }
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut out = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Input(format!("serialization failed: {e}")))?;
    out.push('\n');
    Ok(out)
}

/// `spectral`: spectral resolution of a Hermitian matrix file.
pub fn run_spectral(input: &Path, tol: Tolerance64) -> Result<String, CliError> {
    let a = load_matrix(input)?;
    ensure_hermitian(&a, tol, input)?;
    let resolution = spectral_resolution(&a, tol)
        .map_err(|e| CliError::Math(format!("{}: {e}", input.display())))?;
    to_json(&ResolutionDoc::from_resolution(&resolution))
}

/// `measure`: Born distribution with post-measurement states.
pub fn run_measure(observable: &Path, state: &Path, tol: Tolerance64) -> Result<String, CliError> {
    let a = load_matrix(observable)?;
    ensure_hermitian(&a, tol, observable)?;
    let z = load_state_checked(state, tol, a.dim())?;
    let distribution =
        measure(&a, &z, tol).map_err(|e| CliError::Math(format!("measurement failed: {e}")))?;
    to_json(&DistributionDoc::from_distribution(&distribution))
}

fn load_state_checked(
    state: &Path,
    tol: Tolerance64,
    expected_dim: usize,
) -> Result<PureState<f64>, CliError> {
    // Dimension errors take precedence over normalization errors, so peek at
    // the raw document first.
    let doc: VectorDoc = read_json(state)?;
    ensure_same_dim(expected_dim, doc.n)?;
    load_state(state, tol)
}

/// `sample`: seeded Monte-Carlo check of the Born frequencies.
pub fn run_sample(
    observable: &Path,
    state: &Path,
    n: u64,
    seed: u64,
    tol: Tolerance64,
) -> Result<String, CliError> {
    if n == 0 {
        return Err(CliError::Input("sample count must be at least 1".into()));
    }
    let a = load_matrix(observable)?;
    ensure_hermitian(&a, tol, observable)?;
    let z = load_state_checked(state, tol, a.dim())?;
    let distribution =
        measure(&a, &z, tol).map_err(|e| CliError::Math(format!("measurement failed: {e}")))?;
    let report = sample_distribution(
        &distribution,
        n,
        seed,
        &observable.display().to_string(),
        &state.display().to_string(),
    );
    to_json(&report)
}

/// `bloch`: Bloch-sphere coordinates of a qubit state file.
pub fn run_bloch(state: &Path, tol: Tolerance64) -> Result<String, CliError> {
    let doc: VectorDoc = read_json(state)?;
    ensure_same_dim(2, doc.n)?;
    let z = load_state(state, tol)?;
    let b = qubit::bloch(&z).map_err(|e| CliError::Math(format!("{e}")))?;
    to_json(&BlochDoc::from_bloch(&b))
}

#[derive(Debug, Serialize)]
struct ClassicalEmbedReport {
    classical_expectation: f64,
    quantum_expectation: f64,
    abs_difference: f64,
    classical_spectrum: Vec<f64>,
    quantum_spectral_values: Vec<f64>,
}

/// `classical-embed`: classical expectation vs the embedded quantum one,
/// plus the canonical-form and spectral-resolution value lists side by side.
pub fn run_classical_embed(
    space_path: &Path,
    variable_path: &Path,
    tol: Tolerance64,
) -> Result<String, CliError> {
    let space_doc: SpaceDoc = read_json(space_path)?;
    let report = classical::verify_axioms(&space_doc.weights);
    if let Some(axiom) = report.first_violation {
        return Err(CliError::Math(format!(
            "space in {} violates the {axiom:?} axiom: total mass {}, weights in [{}, {}], \
             max additivity error {:e}",
            space_path.display(),
            report.total_mass,
            report.min_weight,
            report.max_weight,
            report.max_additivity_error,
        )));
    }
    let space = space_doc
        .to_space::<f64>()
        .map_err(|e| CliError::Input(format!("{}: {e}", space_path.display())))?;
    let variable_doc: RandomVariableDoc = read_json(variable_path)?;
    let x = variable_doc
        .to_variable::<f64>()
        .map_err(|e| CliError::Input(format!("{}: {e}", variable_path.display())))?;
    ensure_same_dim(space.size(), x.len())?;

    let classical_expectation = space
        .expected_value(&x)
        .map_err(|e| CliError::Input(format!("{e}")))?;
    let (observable, functional) =
        embed_classical(&space, &x).map_err(|e| CliError::Math(format!("{e}")))?;
    let quantum_expectation = functional
        .evaluate(&observable)
        .map_err(|e| CliError::Math(format!("{e}")))?
        .re;
    let resolution =
        spectral_resolution(&observable, tol).map_err(|e| CliError::Math(format!("{e}")))?;

    to_json(&ClassicalEmbedReport {
        classical_expectation,
        quantum_expectation,
        abs_difference: (classical_expectation - quantum_expectation).abs(),
        classical_spectrum: x.spectrum(),
        quantum_spectral_values: resolution.values().collect(),
    })
}
