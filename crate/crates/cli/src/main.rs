//! `kgalilei`: verification suites and calculators for the k-deformed
//! Galilei group.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "kgalilei", version, about = "Checks and calculators for the k-deformed Galilei group")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run a verification suite.
    #[command(subcommand)]
    Verify(Verify),
    /// Mass coordinates and the composition law.
    #[command(subcommand)]
    Mass(Mass),
    /// Deformed hydrogen model.
    #[command(subcommand)]
    Hydrogen(Hydrogen),
    /// Projective phase of the Galilei action on a momentum grid.
    #[command(subcommand)]
    Cocycle(Cocycle),
}

#[derive(Subcommand, Debug)]
pub enum Verify {
    /// Jacobi, coproduct, coassociativity, counit and antipode identities.
    Hopf {
        /// Central constant in [K_i, P_i]: `normalized` (k/2) or `reference`.
        #[arg(long, value_enum, default_value_t = Central::Normalized)]
        central: Central,
    },
    /// One- and two-particle realization identities in exact arithmetic.
    Realization {
        /// Exact rational backend (the only backend for this suite).
        #[arg(long)]
        exact: bool,
        /// Add a rational offset (e.g. `1/1000`) to the one-particle physical mass.
        #[arg(long, value_name = "RATIONAL")]
        perturb_mf: Option<String>,
    },
    /// Angle search, (US)² = I and exchange projectors.
    Equivalence(PairArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Central {
    Normalized,
    Reference,
}

#[derive(Args, Debug)]
pub struct PairArgs {
    #[arg(long)]
    pub mf: f64,
    #[arg(long)]
    pub mfp: f64,
    /// Deformation parameter; `inf` for the undeformed group.
    #[arg(long)]
    pub k: String,
}

#[derive(Subcommand, Debug)]
pub enum Mass {
    /// Total physical mass of several particles.
    Compose {
        #[arg(long)]
        k: String,
        /// Physical masses.
        #[arg(required = true, num_args = 2.., allow_negative_numbers = true)]
        masses: Vec<f64>,
    },
    /// Convert between physical and algebra mass.
    Convert {
        #[arg(long)]
        k: String,
        /// Coordinate of the given value.
        #[arg(long, value_enum, default_value_t = MassKind::Physical)]
        from: MassKind,
        #[arg(allow_negative_numbers = true)]
        value: f64,
    },
    /// Deformed reduced mass.
    Reduced {
        #[arg(long)]
        k: String,
        #[arg(allow_negative_numbers = true)]
        m1: f64,
        #[arg(allow_negative_numbers = true)]
        m2: f64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MassKind {
    Physical,
    Algebra,
}

#[derive(Subcommand, Debug)]
pub enum Hydrogen {
    /// Bound-state levels, closed form and/or radial solver.
    Spectrum {
        #[arg(long)]
        mf: f64,
        #[arg(long)]
        mfp: f64,
        #[arg(long)]
        k: String,
        #[arg(long, default_value_t = 3)]
        nmax: u32,
        #[arg(long, value_enum, default_value_t = Solver::Both)]
        solver: Solver,
        /// Coupling e².
        #[arg(long, default_value_t = 1.0)]
        e2: f64,
        #[arg(long, default_value_t = 1.0)]
        hbar: f64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Solver {
    Closed,
    Radial,
    Both,
}

#[derive(Subcommand, Debug)]
pub enum Cocycle {
    /// Extract the composition phase for random element pairs.
    Demo {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        pairs: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match commands::run(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let text = match cli.format {
        Format::Json => report.render_json(),
        Format::Csv => report.render_csv(),
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    let mut failed = false;
    for c in report.failures() {
        failed = true;
        eprintln!("check failed: {}: {}", c.name, c.detail.as_deref().unwrap_or("no detail"));
    }
    if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
