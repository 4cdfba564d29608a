//! Seeded Monte-Carlo sampler over a Born distribution, with the report
//! comparing empirical frequencies against the theoretical probabilities.
//!
//! Sampling is inverse-CDF over outcomes in eigenvalue-ascending order,
//! driven by SplitMix64 doubles: draw u ∈ [0,1) and pick the first outcome
//! whose cumulative probability exceeds u. Identical seeds give bit-identical
//! reports.

use serde::{Deserialize, Serialize};

use qprob_core::quantum::MeasurementDistribution;
use qprob_core::rng::SplitMix64;

/// Per-outcome row of a [`SampleReport`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleOutcome {
    pub value: f64,
    pub theoretical_prob: f64,
    pub count: u64,
    pub empirical_freq: f64,
    /// (freq − p)·√(n/(p(1−p))); omitted when p ∈ {0,1}.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z_score: Option<f64>,
}

/// Empirical check of the Born frequencies for one observable/state pair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleReport {
    pub observable_id: String,
    pub state_id: String,
    pub n_samples: u64,
    pub seed: u64,
    pub outcomes: Vec<SampleOutcome>,
}

/// Draws `n` i.i.d. outcomes from the distribution and tabulates counts,
/// frequencies, and z-scores.
pub fn sample_distribution(
    distribution: &MeasurementDistribution<f64>,
    n: u64,
    seed: u64,
    observable_id: &str,
    state_id: &str,
) -> SampleReport {
    let probs: Vec<f64> = distribution
        .outcomes()
        .iter()
        .map(|o| o.probability)
        .collect();
    let counts = draw_counts(&probs, n, seed);
    let outcomes = distribution
        .outcomes()
        .iter()
        .zip(&counts)
        .map(|(o, &count)| {
            let p = o.probability;
            let freq = count as f64 / n as f64;
            let z_score = if p > 0.0 && p < 1.0 {
                Some((freq - p) * (n as f64 / (p * (1.0 - p))).sqrt())
            } else {
                None
            };
            SampleOutcome {
                value: o.value,
                theoretical_prob: p,
                count,
                empirical_freq: freq,
                z_score,
            }
        })
        .collect();
    SampleReport {
        observable_id: observable_id.to_string(),
        state_id: state_id.to_string(),
        n_samples: n,
        seed,
        outcomes,
    }
}

/// Inverse-CDF sampling: per-outcome counts over `n` draws.
///
/// The final outcome absorbs any draw beyond the accumulated total, so
/// rounding in the CDF can never lose a sample.
fn draw_counts(probs: &[f64], n: u64, seed: u64) -> Vec<u64> {
    let mut cdf = Vec::with_capacity(probs.len());
    let mut acc = 0.0;
    for p in probs {
        acc += p;
        cdf.push(acc);
    }
    let mut counts = vec![0u64; probs.len()];
    let mut rng = SplitMix64::new(seed);
    for _ in 0..n {
        let u = rng.next_f64();
        let k = cdf
            .iter()
            .position(|&edge| u < edge)
            .unwrap_or(probs.len() - 1);
        counts[k] += 1;
    }
    counts
}
