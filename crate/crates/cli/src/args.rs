use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use evosieve::{DimConvention, Ring};
use serde::Serialize;

#[derive(Parser, Debug, Clone)]
#[command(
    name = "evosieve",
    version,
    about = "Lattice generation, reduction and evolutionary sieving"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Command {
    /// Write a random, module or knapsack basis.
    Generate(GenerateArgs),
    /// Run LLL and/or Hermite normal form on a basis.
    Reduce(ReduceArgs),
    /// Search for short vectors with the genetic or the naive sieve.
    Sieve(SieveArgs),
    /// Check lattice membership of a vector or the LLL conditions of a basis.
    Verify(VerifyArgs),
    /// Run a dimension sweep from a TOML config and print one CSV row per run.
    Bench(BenchArgs),
    /// Rerun a command recorded in a manifest.
    Replay(ReplayArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Generate(_) => "generate",
            Command::Reduce(_) => "reduce",
            Command::Sieve(_) => "sieve",
            Command::Verify(_) => "verify",
            Command::Bench(_) => "bench",
            Command::Replay(_) => "replay",
        }
    }

    /// Fixes the seed so that the environment cannot change a replay.
    pub fn pin_seed(&mut self, seed: u64) {
        match self {
            Command::Generate(a) => a.seed = seed,
            Command::Sieve(a) => a.seed = seed,
            _ => {}
        }
    }

    /// Sends output to `out` (stdout when `None`) and drops manifest writing.
    pub fn redirect(&mut self, out: Option<PathBuf>) {
        match self {
            Command::Generate(a) => (a.out, a.manifest) = (out, None),
            Command::Reduce(a) => (a.out, a.manifest) = (out, None),
            Command::Sieve(a) => (a.out, a.manifest) = (out, None),
            Command::Bench(a) => (a.out, a.manifest) = (out, None),
            Command::Verify(_) | Command::Replay(_) => {}
        }
    }
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct GenerateArgs {
    /// Coefficient ring: int or gaussian.
    #[arg(long, default_value = "int")]
    pub ring: Ring,
    /// Lattice dimension.
    #[arg(long, required_unless_present = "knapsack")]
    pub dim: Option<usize>,
    #[arg(long, env = "EVOSIEVE_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Entries are drawn from [-bound, bound]; default d³.
    #[arg(long)]
    pub entry_bound: Option<u64>,
    /// Other columns added to each column of a module basis; default ⌊d/4⌋.
    #[arg(long)]
    pub mix_count: Option<usize>,
    /// Apply HNF then LLL before writing (integer lattices only).
    #[arg(long)]
    pub preprocess: bool,
    /// Lovász constant for --preprocess.
    #[arg(long, default_value = "0.9999999")]
    pub delta: String,
    /// Knapsack weights, comma separated; writes the knapsack basis.
    #[arg(long, requires = "target", conflicts_with_all = ["dim", "mix_count", "entry_bound"])]
    pub knapsack: Option<String>,
    /// Knapsack target sum.
    #[arg(long, requires = "knapsack")]
    pub target: Option<String>,
    /// Write JSON instead of the bracketed text format.
    #[arg(long)]
    pub json: bool,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
    /// Record a replay manifest here.
    #[arg(long)]
    pub manifest: Option<PathBuf>,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct ReduceArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Ring of a text basis; guessed from the file when omitted.
    #[arg(long)]
    pub ring: Option<Ring>,
    #[arg(long, default_value = "0.75")]
    pub delta: String,
    /// Cap on LLL outer iterations.
    #[arg(long)]
    pub max_sweeps: Option<usize>,
    /// Only compute the Hermite normal form.
    #[arg(long, conflicts_with = "hnf")]
    pub hnf_only: bool,
    /// Compute the Hermite normal form before LLL.
    #[arg(long)]
    pub hnf: bool,
    #[arg(long)]
    pub json: bool,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub manifest: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportFormat {
    Csv,
    Jsonl,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct SieveArgs {
    #[arg(
        long = "in",
        required_unless_present = "demo2d",
        conflicts_with = "demo2d"
    )]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub ring: Option<Ring>,
    /// Run on the built-in two-dimensional example and its starting population.
    #[arg(long)]
    pub demo2d: bool,
    /// Use plain differences with global selection instead of the genetic sieve.
    #[arg(long)]
    pub naive: bool,
    /// Population size; default min(10d, 2^(d-1)).
    #[arg(long)]
    pub pop: Option<usize>,
    /// Density of the initial binary coefficients.
    #[arg(long, default_value_t = 0.01)]
    pub rho: f64,
    /// Chance that a crossover scales its coefficient by ξ ~ N(1, 1).
    #[arg(long, default_value_t = 0.0)]
    pub mutation: f64,
    #[arg(long, env = "EVOSIEVE_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Accepted children per generation are capped at ⌈n^e⌉.
    #[arg(long, default_value_t = 1.5)]
    pub budget_exponent: f64,
    /// Stop once the best vector is at most this long.
    #[arg(long)]
    pub target_norm: Option<f64>,
    /// Plateau rule: stop after --plateau-streak generations whose mean
    /// length moved by less than this.
    #[arg(long, default_value_t = 1.0)]
    pub plateau_epsilon: f64,
    #[arg(long, default_value_t = 3)]
    pub plateau_streak: usize,
    #[arg(long, default_value_t = 1000)]
    pub max_generations: usize,
    /// Leave the basis columns out of the initial population.
    #[arg(long)]
    pub no_basis_columns: bool,
    /// LLL-reduce the basis before sieving.
    #[arg(long)]
    pub lll: bool,
    #[arg(long, default_value = "0.9999999")]
    pub delta: String,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    #[arg(long, value_enum, default_value_t = ReportFormat::Csv)]
    pub format: ReportFormat,
    /// Dimension convention for σ of module lattices: real-dim or ring-dim.
    #[arg(long, default_value = "real-dim")]
    pub sigma_convention: DimConvention,
    /// Knapsack instance `m1,m2,...:S`; decode the best solution vector found.
    #[arg(long)]
    pub decode_knapsack: Option<String>,
    /// Write 0 for elapsed times so that reports are reproducible byte for byte.
    #[arg(long)]
    pub no_timing: bool,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub manifest: Option<PathBuf>,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct VerifyArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub ring: Option<Ring>,
    /// Claimed lattice vector, e.g. "(40, 5)".
    #[arg(long)]
    pub vector: Option<String>,
    /// Check that the basis is LLL-reduced.
    #[arg(long)]
    pub reduced: bool,
    #[arg(long, default_value = "0.75")]
    pub delta: String,
    #[arg(long, default_value = "real-dim")]
    pub sigma_convention: DimConvention,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct BenchArgs {
    #[arg(long)]
    pub config: PathBuf,
    /// CSV with columns `d,ell` (and optionally `ring`) from another solver.
    #[arg(long)]
    pub baseline_csv: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    #[arg(long)]
    pub no_timing: bool,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub manifest: Option<PathBuf>,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct ReplayArgs {
    pub manifest: PathBuf,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}
