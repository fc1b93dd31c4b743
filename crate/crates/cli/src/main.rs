use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser)]
#[command(
    name = "blobdecomp",
    version,
    about = "Graded decomposition numbers of the blob algebra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Worker threads for parallel sections (default: all cores).
    #[arg(long, global = true)]
    parallel: Option<usize>,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Ascii,
    Pretty,
}

#[derive(Args, Clone, Copy)]
pub struct AlgebraArgs {
    #[arg(long)]
    pub l: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub m: i64,
}

#[derive(Args, Clone)]
pub struct WeightArgs {
    /// Weight `a - b` of the one-line bipartition ((a),(b)).
    #[arg(
        long,
        allow_hyphen_values = true,
        conflicts_with = "bipartition",
        required_unless_present = "bipartition"
    )]
    pub lambda: Option<i64>,
    /// The bipartition ((a),(b)) as `a,b`.
    #[arg(long, value_name = "A,B")]
    pub bipartition: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Validate parameters and list walls.
    Params {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// Residues and degree of a tableau, with its walk drawn.
    Walk {
        /// Sign sequence such as `++-+`, or comma-separated weights with --as-weights.
        #[arg(allow_hyphen_values = true)]
        tableau: String,
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long)]
        as_weights: bool,
    },
    /// Classification, orbit and indexed M_n(lambda).
    Orbit {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[command(flatten)]
        weight: WeightArgs,
    },
    /// Graded cell and simple dimensions of the idempotent subalgebra.
    Dims {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[command(flatten)]
        weight: WeightArgs,
    },
    /// The full graded decomposition matrix.
    Decomp {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// Consistency and enumeration checks for every n up to --max-n.
    Verify {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long)]
        max_n: i64,
    },
}

/// Exit code 2 for bad input, 1 for everything else.
#[derive(Debug)]
pub enum CliError {
    Invalid(String),
    Failed(String),
}

impl<E: std::error::Error> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError::Invalid(e.to_string())
    }
}

pub struct Output {
    pub text: String,
    pub success: bool,
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    if let Some(threads) = cli.parallel {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads.max(1))
            .build_global()
            .map_err(|e| CliError::Failed(e.to_string()))?;
    }
    let f = cli.format;
    match &cli.command {
        Command::Params { alg, n } => commands::params(alg, *n, f),
        Command::Walk {
            tableau,
            alg,
            as_weights,
        } => commands::walk(tableau, alg, *as_weights, f),
        Command::Orbit { alg, n, weight } => commands::orbit(alg, *n, weight, f),
        Command::Dims { alg, n, weight } => commands::dims(alg, *n, weight, f),
        Command::Decomp { alg, n } => commands::decomp(alg, *n, f),
        Command::Verify { alg, max_n } => commands::verify(alg, *max_n, f),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = match run(&cli) {
        Ok(o) => o,
        Err(CliError::Invalid(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(CliError::Failed(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    let written = match &cli.out {
        Some(path) => fs::write(path, &output.text),
        None => io::stdout().lock().write_all(output.text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    if output.success {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
