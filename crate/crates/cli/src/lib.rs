//! Library surface behind the `qprob` binary: subcommand implementations
//! and the seeded Born sampler.

pub mod commands;
pub mod sampler;

pub use commands::CliError;
pub use sampler::{sample_distribution, SampleOutcome, SampleReport};
