use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use qprob_cli::commands::{
    run_bloch, run_classical_embed, run_measure, run_sample, run_spectral, CliError,
};
use qprob_core::{Tolerance, Tolerance64};

/// Finite-dimensional quantum probability, batch style: spectral
/// resolutions, Born-rule measurement, seeded sampling, Bloch coordinates,
/// and the classical embedding. All I/O is JSON.
#[derive(Parser)]
#[command(name = "qprob", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Absolute tolerance for Hermiticity and normalization checks.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,

    /// Write output to this path instead of standard output.
    #[arg(long, global = true, default_value = "stdout")]
    output: String,
}

#[derive(Subcommand)]
enum Command {
    /// Spectral resolution of a Hermitian matrix file.
    Spectral {
        /// Matrix JSON: {"n":..., "rows":[[[re,im],...],...]}.
        observable: PathBuf,
    },
    /// Born distribution of an observable in a state, with post-states.
    Measure {
        observable: PathBuf,
        /// Vector JSON: {"n":..., "entries":[[re,im],...]}.
        state: PathBuf,
    },
    /// Draw seeded Monte-Carlo samples and compare against Born frequencies.
    Sample {
        observable: PathBuf,
        state: PathBuf,
        /// Number of draws.
        #[arg(long, default_value_t = 100_000)]
        n: u64,
        /// PRNG seed; identical seeds give byte-identical reports.
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Bloch-sphere coordinates of a qubit state.
    Bloch { state: PathBuf },
    /// Classical expectation vs the embedded quantum expectation.
    ClassicalEmbed {
        /// Space JSON: {"labels":[...], "weights":[...]}.
        space: PathBuf,
        /// Random variable JSON: {"values":[...]}.
        variable: PathBuf,
    },
}

fn run(cli: &Cli, tol: Tolerance64) -> Result<String, CliError> {
    match &cli.command {
        Command::Spectral { observable } => run_spectral(observable, tol),
        Command::Measure { observable, state } => run_measure(observable, state, tol),
        Command::Sample {
            observable,
            state,
            n,
            seed,
        } => run_sample(observable, state, *n, *seed, tol),
        Command::Bloch { state } => run_bloch(state, tol),
        Command::ClassicalEmbed { space, variable } => run_classical_embed(space, variable, tol),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let tol = match Tolerance::new(cli.tol) {
        Ok(tol) => tol,
        Err(_) => {
            eprintln!("input error: --tol must be a finite nonnegative number");
            return ExitCode::from(2);
        }
    };
    match run(&cli, tol) {
        Ok(json) => {
            if cli.output == "stdout" {
                print!("{json}");
            } else if let Err(e) = fs::write(&cli.output, &json) {
                eprintln!("input error: cannot write {}: {e}", cli.output);
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
