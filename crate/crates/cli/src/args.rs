use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qmc_core::Partition;

#[derive(Debug, Parser)]
#[command(name = "qmc", version, about = "Exact Quantum Max-d-Cut values on complete multipartite graphs")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    pub output: OutputFormat,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Maximize Ξ over valid tuples (the representation-theoretic solver).
    Solve(InstanceArgs),
    /// Evaluate the closed-form value for d ∈ {1, 2, 3}.
    ClosedForm(InstanceArgs),
    /// Largest eigenvalue of the Hamiltonian by power iteration.
    Brute(BruteArgs),
    /// Cross-check solver, closed forms and oracle over a grid.
    Verify(VerifyArgs),
    /// Iterated Littlewood–Richardson coefficient.
    Lr(LrArgs),
    /// Contents, η and dimensions of a partition.
    Eta(EtaArgs),
    /// Table of solver, closed-form and oracle values over a range of instances.
    Sweep(SweepArgs),
    /// Full spectrum of the Hamiltonian by dense diagonalization.
    Spectrum(GraphArgs),
}

#[derive(Debug, Args)]
pub struct InstanceArgs {
    /// Local dimension.
    #[arg(long)]
    pub d: usize,
    /// Part sizes, comma-separated.
    #[arg(long, value_parser = parse_parts)]
    pub parts: Parts,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    #[arg(long)]
    pub d: usize,
    /// Part sizes of a complete multipartite graph.
    #[arg(long, value_parser = parse_parts, conflicts_with = "graph", required_unless_present = "graph")]
    pub parts: Option<Parts>,
    /// Edge-list file: a header "n m", then m lines "i j".
    #[arg(long)]
    pub graph: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    #[arg(long, default_value_t = 200_000)]
    pub max_iters: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct BruteArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[command(flatten)]
    pub oracle: OracleArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Check {
    Tripartite,
    Clique,
    Complement,
    Eta,
    Lr,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Bound on n for the tripartite grid at both d = 2 and d = 3 (defaults
    /// 10 and 7). The other checks run up to their defaults (clique 6 / 5,
    /// complement 8, eta 25, lr 9 / 8), lowered to this value if smaller.
    #[arg(long)]
    pub max_n: Option<usize>,
    /// Checks to run, comma-separated. Defaults to all.
    #[arg(long, value_enum, value_delimiter = ',')]
    pub checks: Vec<Check>,
    #[command(flatten)]
    pub oracle: OracleArgs,
}

#[derive(Debug, Args)]
pub struct LrArgs {
    #[arg(long)]
    pub lambda: Partition,
    /// Factor partitions separated by '/', e.g. 2,1/3/2.
    #[arg(long, value_parser = parse_factors)]
    pub factors: Factors,
    /// Also count directly from two-coloured fillings (three factors only).
    #[arg(long)]
    pub direct: bool,
}

#[derive(Debug, Args)]
pub struct EtaArgs {
    #[arg(long)]
    pub partition: Partition,
    /// Local dimension for the row formula and the Schur–Weyl multiplicity.
    #[arg(long)]
    pub d: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub d: usize,
    #[arg(long, default_value_t = 3)]
    pub min_n: usize,
    #[arg(long)]
    pub max_n: usize,
    /// Largest d^n for which the oracle column is filled.
    #[arg(long, default_value_t = 4096)]
    pub oracle_max_dim: u64,
    #[command(flatten)]
    pub oracle: OracleArgs,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parts(pub Vec<usize>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factors(pub Vec<Partition>);

pub fn parse_parts(s: &str) -> Result<Parts, String> {
    let parts = s
        .split(',')
        .map(|t| {
            let t = t.trim();
            match t.parse::<usize>() {
                Ok(0) => Err("part sizes must be positive".to_string()),
                Ok(x) => Ok(x),
                Err(e) => Err(format!("bad part size {t:?}: {e}")),
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Parts(parts))
}

pub fn parse_factors(s: &str) -> Result<Factors, String> {
    s.split('/')
        .map(|t| t.parse::<Partition>().map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()
        .map(Factors)
}
