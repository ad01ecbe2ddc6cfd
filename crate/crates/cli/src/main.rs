use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod commands;
mod report;

use report::Failure;

/// Exact eigenspace analysis of trees.
#[derive(Parser)]
#[command(name = "tree-eigen", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Integer eigenvalues with multiplicities, nullity and matching number.
    Spectrum {
        /// Edge-list file, or `-` for standard input.
        graph: PathBuf,
    },
    /// Exact eigenspace basis and support for one eigenvalue.
    Eigenspace {
        graph: PathBuf,
        /// Eigenvalue as an integer or `p/q`.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Skeleton forest and meta skeleton for one eigenvalue.
    Skeleton {
        graph: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Also write the skeleton as a DOT file.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Maximum matching, vertex classification and the {0, 1, -1} null space basis.
    KernelBasis { graph: PathBuf },
    /// Test for a {1, -1} eigenvector for eigenvalue 1 by gadget reduction.
    Classc { graph: PathBuf },
    /// Eigenspace basis with entries in {0, 1, -1} for eigenvalue 0, 1 or -1.
    Basis {
        graph: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Blow up a meta skeleton described in a TOML file.
    Compose {
        #[arg(long)]
        spec: PathBuf,
        /// Largest tree searched for missing replacements.
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// Seed for the replacement search beyond the exhaustive orders.
        #[arg(long, env = "SEED", default_value_t = 0)]
        seed: u64,
    },
    /// Support, nullity formula and branch rescaling for a tree pattern matrix.
    Pattern {
        /// Matrix JSON file, or `-` for standard input.
        matrix: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Run the property suites over enumerated and sampled trees.
    Verify {
        /// Enumerate every labeled tree up to this order.
        #[arg(long, default_value_t = 7)]
        exhaustive_n: usize,
        /// Random trees per larger order.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, env = "SEED", default_value_t = 0)]
        seed: u64,
    },
}

fn run(cli: Cli) -> Result<report::Report, Failure> {
    match cli.command {
        Command::Spectrum { graph } => commands::spectrum(&graph),
        Command::Eigenspace { graph, lambda } => commands::eigenspace(&graph, &lambda),
        Command::Skeleton { graph, lambda, dot } => {
            commands::skeleton(&graph, &lambda, dot.as_deref())
        }
        Command::KernelBasis { graph } => commands::kernel_basis(&graph),
        Command::Classc { graph } => commands::classc(&graph),
        Command::Basis { graph, lambda } => commands::basis(&graph, &lambda),
        Command::Compose { spec, n_max, seed } => commands::compose(&spec, n_max, seed),
        Command::Pattern { matrix, lambda } => commands::pattern(&matrix, &lambda),
        Command::Verify {
            exhaustive_n,
            samples,
            seed,
        } => commands::verify(exhaustive_n, samples, seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(report) => {
            let failed = report.failed;
            let mut out = std::io::stdout().lock();
            if let Err(e) = writeln!(out, "{}", report.to_json()) {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    eprintln!("error: writing report: {e}");
                    return ExitCode::from(2);
                }
            }
            if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
