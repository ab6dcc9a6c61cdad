//! `mldeg`: degrees and ML degrees of toric models from the command line.

mod catalog;
mod commands;
mod source;
mod verify;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mldeg_core::builders::Construction;
use mldeg_core::solver::TrackerConfig;

#[derive(Parser)]
#[command(name = "mldeg", version, about = "Degrees and maximum likelihood degrees of toric models")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print dimension, vertices, lattice points, f-vector, reflexivity and degree.
    Info {
        #[command(flatten)]
        source: SourceArgs,
        /// Also list the lattice points in design-matrix order.
        #[arg(long)]
        points: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Count complex critical points of the log-likelihood.
    Mldeg {
        #[command(flatten)]
        source: SourceArgs,
        /// Scaling weights, one `re [im]` per line in design-matrix order.
        #[arg(long)]
        scaling: Option<String>,
        /// Solve for this data vector only and print the solutions.
        #[arg(long)]
        data: Option<String>,
        #[command(flatten)]
        tracker: TrackerArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compare the ML degree drop with the principal A-determinant test.
    DropCheck {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        scaling: Option<String>,
        #[command(flatten)]
        tracker: TrackerArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Apply a construction and write the result as a vertex matrix.
    Construct {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        output: Option<String>,
    },
    /// Compute records for every block of a KS-style file.
    Catalog {
        #[arg(long)]
        file: String,
        #[arg(long)]
        transpose: bool,
        /// Process at most this many blocks from the start of the file.
        #[arg(long)]
        limit: Option<usize>,
        /// Output file; an existing file is resumed after its last record.
        #[arg(long)]
        output: Option<String>,
        #[arg(long, value_enum, default_value_t = CatalogFormat::Json)]
        format: CatalogFormat,
        /// Write runtime_ms as 0 so that reruns are byte-identical.
        #[arg(long)]
        no_timing: bool,
        #[command(flatten)]
        tracker: TrackerArgs,
    },
    /// Recompute a table of known values and print PASS/FAIL per row.
    VerifyPaper {
        #[arg(long, value_enum, default_value_t = verify::Suite::All)]
        suite: verify::Suite,
        /// Include the larger simplices in the simplices suite.
        #[arg(long)]
        extended: bool,
        #[command(flatten)]
        tracker: TrackerArgs,
    },
}

#[derive(Args, Clone)]
pub struct SourceArgs {
    /// Builtin polytope name.
    #[arg(long, conflicts_with = "file", required_unless_present = "file", help = format!("Builtin polytope: {}", mldeg_core::catalog::BUILTIN_HELP))]
    pub builtin: Option<String>,
    /// KS-style vertex matrix file.
    #[arg(long)]
    pub file: Option<String>,
    /// Block of the file to use, counted from 0.
    #[arg(long, default_value_t = 0, requires = "file")]
    pub index: usize,
    /// Read the matrix rows as points regardless of its shape.
    #[arg(long, requires = "file")]
    pub transpose: bool,
    /// Construction applied to the polytope.
    #[arg(long)]
    pub construct: Option<Construction>,
    /// Number of times the construction is applied.
    #[arg(long, default_value_t = 1, requires = "construct")]
    pub iterate: usize,
}

#[derive(Args, Clone)]
pub struct TrackerArgs {
    /// Number of random data vectors.
    #[arg(long, default_value_t = 3)]
    pub seeds: usize,
    /// Base random seed.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Track systems whose Bezout number exceeds the path cap.
    #[arg(long)]
    pub force: bool,
}

impl TrackerArgs {
    pub fn config(&self) -> TrackerConfig {
        let mut cfg = TrackerConfig { seeds: self.seeds.max(1), seed: self.seed, ..TrackerConfig::default() };
        if self.force {
            cfg.max_paths = u64::MAX;
        }
        cfg
    }
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
pub enum CatalogFormat {
    Json,
    Csv,
}

/// How a command finished.
pub enum Outcome {
    Pass,
    Fail,
}

fn exit_code(err: &anyhow::Error) -> u8 {
    // A numerical failure is a FAIL; everything else is bad input.
    match err.downcast_ref::<mldeg_core::Error>() {
        Some(mldeg_core::Error::NoConvergence { .. }) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Info { source, points, format } => commands::info(&source, points, format),
        Command::Mldeg { source, scaling, data, tracker, format } => {
            commands::mldeg(&source, scaling.as_deref(), data.as_deref(), &tracker.config(), format)
        }
        Command::DropCheck { source, scaling, tracker, format } => {
            commands::drop_check(&source, scaling.as_deref(), &tracker.config(), format)
        }
        Command::Construct { source, output } => commands::construct(&source, output.as_deref()),
        Command::Catalog { file, transpose, limit, output, format, no_timing, tracker } => {
            catalog::run(&catalog::Options {
                file,
                transpose,
                limit,
                output,
                format,
                timing: !no_timing,
                cfg: tracker.config(),
            })
        }
        Command::VerifyPaper { suite, extended, tracker } => verify::run(suite, extended, &tracker.config()),
    };
    match result {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
