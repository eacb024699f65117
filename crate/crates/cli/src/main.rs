//! Command-line harness: configuration loading, verification-suite
//! execution, diagonal transforms, and table emission.

mod checks;
mod commands;
mod config;
mod presets;
mod rng;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{EXIT_CONFIG_ERROR, EXIT_INVARIANT_FAILURE};

#[derive(Parser)]
#[command(
    name = "kafourier",
    about = "Verification suite and table generator for the deformed operator calculus",
    after_help = "Root-system presets: A1, A1xA1, A1xA1xA1 (alias A1^3), I2(p).\n\
                  Exit codes: 0 = all checks passed, 1 = invariant failure, 2 = configuration error."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Path to the JSON run configuration.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Output directory (overrides the configuration's out_dir).
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Quadrature node count (overrides the configuration).
    #[arg(long, global = true)]
    nodes: Option<usize>,

    /// Spectral truncation (overrides the configuration).
    #[arg(long, global = true)]
    truncation: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Run the registered verification checks and write report.txt.
    Verify,
    /// Emit the discrete spectrum table for both deformation signs.
    Spectrum,
    /// Expand an input profile and apply the configured diagonal transform.
    Transform,
    /// Emit basis-function value tables over the configured radius grid.
    BasisTable,
}

fn run(cli: Cli) -> i32 {
    let Some(path) = cli.config.as_deref() else {
        eprintln!("configuration error: --config <path> is required");
        return EXIT_CONFIG_ERROR;
    };
    let mut config = match config::load_config(path) {
        Ok(config) => config,
        Err(e) => {
            eprintln!("{e}");
            return EXIT_CONFIG_ERROR;
        }
    };
    if let Some(out) = cli.out {
        config.out_dir = out;
    }
    if let Some(nodes) = cli.nodes {
        if nodes == 0 {
            eprintln!("configuration error: nodes must be positive");
            return EXIT_CONFIG_ERROR;
        }
        config.quadrature.nodes = nodes;
    }
    if let Some(truncation) = cli.truncation {
        if truncation == 0 {
            eprintln!("configuration error: truncation must be positive");
            return EXIT_CONFIG_ERROR;
        }
        config.truncation = truncation;
    }

    let outcome = match cli.command {
        Command::Verify => commands::cmd_verify(&config),
        Command::Spectrum => commands::cmd_spectrum(&config),
        Command::Transform => commands::cmd_transform(&config),
        Command::BasisTable => commands::cmd_basis_table(&config),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            // Failures to set up (missing input sections, unknown check
            // names, unwritable outputs) are configuration-class errors;
            // invariant failures return through the Ok path.
            EXIT_CONFIG_ERROR
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = run(cli);
    match code {
        0 => ExitCode::SUCCESS,
        c if c == EXIT_INVARIANT_FAILURE => ExitCode::from(1),
        _ => ExitCode::from(2),
    }
}
