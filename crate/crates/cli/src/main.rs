//! `misbound` — count maximal independent sets and maximal induced
//! bipartite subgraphs, evaluate the counting bounds, and run the
//! exhaustive and instance-level checks. Reports go to stdout as JSON
//! (sorted keys, 12 significant digits) or CSV.
//!
//! Exit codes: 0 success, 1 failed verification or I/O error, 2 unparsable
//! input or arguments, 3 a size guard or precondition refused the input.

mod commands;
mod input;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use output::Format;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Lib(misbound::Error),
    Io(String),
}

impl From<misbound::Error> for CliError {
    fn from(e: misbound::Error) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        use misbound::Error as E;
        match self {
            CliError::Io(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Lib(e) => match e {
                E::Graph6(_)
                | E::EdgeList(_)
                | E::OrderTooLarge(_)
                | E::VertexOutOfRange { .. }
                | E::SelfLoop(_)
                | E::OutOfRange(_) => 2,
                E::Store(_) => 1,
                _ => 3,
            },
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Io(m) => f.write_str(m),
            CliError::Lib(e) => write!(f, "{e}"),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "misbound",
    version,
    about = "Maximal independent set and bipartite subgraph counting workbench"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Worker threads for parallel sections (0 = one per core).
    #[arg(long, default_value_t = 0, global = true)]
    workers: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Maximal independent sets by size, with bound comparisons.
    Mis {
        /// graph6 file (one per line), edge-list file, or `-` for stdin.
        input: PathBuf,
        /// Also report mis_{<=k} and mis_k against the size-indexed bounds.
        #[arg(long)]
        k: Option<usize>,
        /// Enumeration method.
        #[arg(long, value_enum, default_value = "pivot")]
        method: commands::Method,
    },
    /// Maximal induced bipartite subgraphs and the ordered-pair census.
    Mibs {
        input: PathBuf,
        /// List every subgraph's vertex set.
        #[arg(long)]
        list: bool,
    },
    /// Evaluate the bounds at (n, k).
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0.4)]
        eta: f64,
    },
    /// Per-vertex exponent curves over k/n in [1/5, 1/3].
    Curves {
        #[arg(long, default_value_t = 0.4)]
        eta: f64,
        /// Evenly spaced grid points (anchors 1/4 and 0.333 are always added).
        #[arg(long, default_value_t = 101)]
        points: usize,
    },
    /// Solve for an admissible (epsilon, delta) pair of the degree-3 exponent.
    Solve {
        #[arg(long, default_value_t = 0.0)]
        margin: f64,
    },
    /// Run the decomposition, cell selection and transversal census.
    Pipeline {
        /// Input file; omit to use a seeded random K4-free subcubic graph.
        input: Option<PathBuf>,
        /// Order of the random graph when no input is given.
        #[arg(long, default_value_t = 16)]
        random_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Maximal independent set I0, e.g. `0,4,8` (default: a minimum one).
        #[arg(long)]
        i0: Option<String>,
        /// Cell indices S kept out of the partition, e.g. `0,2`.
        #[arg(long)]
        s: Option<String>,
        /// Check how maximal independent sets of this size are captured (0 = |I0|).
        #[arg(long)]
        capture_k: Option<usize>,
        /// When the exhaustive census is too large, sample this many
        /// transversals instead (approximate).
        #[arg(long)]
        monte_carlo: Option<u64>,
    },
    /// Exhaustive scan of all graphs of order n up to isomorphism.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "none")]
        filter: String,
        /// eppstein, nielsen, or corollary1 (uses --eta).
        #[arg(long, default_value = "eppstein")]
        bound: String,
        #[arg(long, default_value_t = 0.4)]
        eta: f64,
        /// Also scan maximal induced bipartite subgraph counts.
        #[arg(long)]
        mibs: bool,
        /// Directory of NDJSON class lists to resume from and extend.
        #[arg(long)]
        store: Option<PathBuf>,
    },
    /// Check the size-indexed bound and its equality cases for every graph of order n.
    VerifyTheorem2 {
        #[arg(long)]
        n: usize,
        /// Check every order from 0 to n.
        #[arg(long)]
        all: bool,
        /// Also check the degree <= 2 slack factors.
        #[arg(long)]
        degree2: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = misbound::configure_workers(cli.workers) {
        eprintln!("misbound: {e}");
        return ExitCode::from(2);
    }
    match commands::run(&cli.command, cli.format) {
        Ok((out, passed)) => {
            print!("{out}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("misbound: {e}");
            if let CliError::Lib(misbound::Error::CensusTooLarge { .. }) = e {
                eprintln!(
                    "misbound: rerun with --monte-carlo <samples> for an approximate estimate"
                );
            }
            ExitCode::from(e.exit_code())
        }
    }
}
