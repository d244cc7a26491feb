mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tensor_restrict::selftest::DEFAULT_SEED;
use tensor_restrict::{Budget, Exec};

/// Restriction, rank and representation-theoretic computations for small
/// tensors over prime fields.
#[derive(Debug, Parser)]
#[command(name = "trestrict", version)]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct RunConfig {
    /// Largest map family an enumeration may walk.
    #[arg(long, global = true, env = "TRESTRICT_MAX_MAPS", default_value_t = 1 << 24, value_parser = positive)]
    pub max_maps: u128,
    /// Largest entry count of any tensor built.
    #[arg(long, global = true, env = "TRESTRICT_MAX_ENTRIES", default_value_t = 1 << 20, value_parser = positive)]
    pub max_entries: u128,
    /// Largest node count of a combinatorial search.
    #[arg(long, global = true, env = "TRESTRICT_MAX_NODES", default_value_t = 1 << 26, value_parser = positive)]
    pub max_nodes: u128,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for the randomized checks.
    #[arg(long, global = true, env = "TRESTRICT_SEED", default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Run every loop on one thread.
    #[arg(long, global = true)]
    pub sequential: bool,
}

impl RunConfig {
    pub fn budget(&self) -> Budget {
        Budget {
            maps: self.max_maps,
            tensor_entries: self.max_entries,
            search_nodes: self.max_nodes,
        }
    }

    pub fn exec(&self) -> Exec {
        if self.sequential {
            Exec::Sequential
        } else {
            Exec::default()
        }
    }
}

fn positive(s: &str) -> Result<u128, String> {
    match s.parse::<u128>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether S restricts to T and print a witness.
    Restrict {
        s: PathBuf,
        t: PathBuf,
        /// One map applied on every axis (default).
        #[arg(long, conflicts_with = "multilinear")]
        uniform: bool,
        /// Independent maps per axis.
        #[arg(long)]
        multilinear: bool,
        /// Enumerate all maps instead of the pruned search.
        #[arg(long, conflicts_with = "multilinear")]
        bruteforce: bool,
    },
    /// Tensor rank by exhaustive decomposition search.
    Rank {
        s: PathBuf,
        #[arg(long, default_value_t = 6)]
        r_max: usize,
    },
    /// Slice rank of an order-3 tensor.
    SliceRank { s: PathBuf },
    /// Analytic rank by counting annihilating tuples.
    AnalyticRank {
        t: PathBuf,
        /// Also evaluate the character sum and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Flattening and decomposition bounds on the ranks of Kronecker powers.
    AsymptoticBounds {
        s: PathBuf,
        #[arg(long, default_value_t = 2)]
        t_max: usize,
        #[arg(long, default_value_t = 6)]
        r_max: usize,
    },
    /// Weight decomposition of a vector in a tensor or symmetric power.
    Weights { v: PathBuf },
    /// Spread the weight of a weight vector out as far as it goes.
    Spread { v: PathBuf },
    /// Apply the operator F_ij[b] (1-based i, j) over K^n.
    FOp {
        v: PathBuf,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        b: u8,
        /// Ambient dimension; defaults to that of the vector.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Structure constants of the Schur algebra S(u, d).
    SchurTable {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        d: usize,
    },
    /// Restriction-closed properties given by forbidden lists.
    #[command(subcommand)]
    Property(PropertyCommand),
    /// Posets of tensors under restriction.
    #[command(subcommand)]
    Poset(PosetCommand),
    /// Count weakly shifted matrix pairs and compare with the prediction.
    WeakShiftCount {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        p: u32,
    },
    /// Run the full check suite.
    Selftest {
        /// Skip the negative controls.
        #[arg(long)]
        no_controls: bool,
        /// Run only these checks, e.g. `--only 3,11`.
        #[arg(long, value_delimiter = ',', value_parser = clap::value_parser!(u8).range(1..=13))]
        only: Vec<u8>,
    },
}

#[derive(Debug, Subcommand)]
pub enum PropertyCommand {
    /// Is S in the property?
    Member {
        #[arg(long)]
        forbidden: PathBuf,
        s: PathBuf,
    },
    /// Do all principal subtensors of side n0 lie in the property?
    SubtensorTest {
        #[arg(long)]
        forbidden: PathBuf,
        #[arg(long)]
        n0: usize,
        s: PathBuf,
    },
    /// Least subtensor size deciding membership up to side n-max.
    MinN0 {
        #[arg(long)]
        forbidden: PathBuf,
        #[arg(long)]
        n_max: usize,
    },
    /// Compile a predicate into a forbidden list.
    Compile {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        d: usize,
        /// Largest side checked.
        #[arg(long)]
        side: usize,
        /// One of zero, flattening-rank:R, tensor-rank:R, slice-rank:R.
        #[arg(long)]
        predicate: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum PosetCommand {
    /// Classes of (K^n)^{⊗d} under mutual restriction and their covers.
    Build {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        /// Write the Hasse diagram to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    ExitCode::from(commands::dispatch(&cli))
}
