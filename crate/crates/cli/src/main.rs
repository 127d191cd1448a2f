use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;

use inertia_core::WeightLaw;

/// Spectral bounds on graph independence numbers.
///
/// Seeds: sub-tasks derive their seeds from `--seed` with a SplitMix64 step
/// over `seed + stream * 0x9E3779B97F4A7C15`. The gap experiment uses stream
/// 2q for the weight search on prime q and stream 2q+1 for the certified
/// random weighting; `certify --random S` uses S directly.
#[derive(Debug, Parser)]
#[command(name = "inertia", version, about)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Zero band for inertia counts [default: 1e-8 * max(1, |A|_F / sqrt(n))]
    #[arg(long, global = true)]
    pub tau: Option<f64>,

    /// Row-sum tolerance for Sinkhorn scaling
    #[arg(long, global = true, default_value_t = 1e-12)]
    pub tol_scaling: f64,

    /// Master seed
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,

    /// Weight-search restarts
    #[arg(long, global = true, default_value_t = 20)]
    pub restarts: usize,

    /// Weight-search steps per restart
    #[arg(long, global = true, default_value_t = 200)]
    pub steps: usize,

    /// Largest n handed to the exact independence solver
    #[arg(long, global = true, default_value_t = 64)]
    pub exact_limit: usize,

    /// Compute the ratio bound on graphs without equal row sums (flagged heuristic)
    #[arg(long, global = true)]
    pub force_ratio: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a graph and write it as an edge list.
    ///
    /// Families: paley Q | polarity Q | girth5 Q | gnp N P | cycle N |
    /// complete N | bipartite A B | star K | petersen | tree N | remark D
    Gen {
        family: String,
        params: Vec<String>,
        /// Output path [default: stdout]
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Report every bound for a graph, optionally with a weighting file.
    Bounds {
        graph: PathBuf,
        #[arg(long)]
        weights: Option<PathBuf>,
    },
    /// Run the inertia certificate on a C4-free graph.
    Certify {
        graph: PathBuf,
        #[arg(long, conflicts_with = "random")]
        weights: Option<PathBuf>,
        /// Certify a random weighting drawn with this seed
        #[arg(long)]
        random: Option<u64>,
        #[arg(long, default_value = "gaussian-complex")]
        law: WeightLaw,
        /// JSON output path [default: stdout]
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Ratio bound versus inertia on girth-5 subgraphs of polarity graphs.
    ExperimentGap {
        /// Comma-separated primes
        #[arg(long, value_delimiter = ',', default_value = "3,5,7,11,13")]
        q: Vec<u64>,
        #[arg(long, default_value = "gaussian-complex")]
        law: WeightLaw,
        /// CSV output path [default: stdout]
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Also write a gnuplot script plotting the CSV
        #[arg(long)]
        gnuplot: Option<PathBuf>,
    },
    /// Eigenvalues, descending, one per line.
    Spectrum {
        /// Edge-list file (unweighted adjacency)
        graph: Option<PathBuf>,
        /// Weighting file; with a graph it must lie on the graph's edges
        #[arg(long)]
        weights: Option<PathBuf>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
