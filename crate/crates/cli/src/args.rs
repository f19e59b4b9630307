use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

/// Edge colorings of K_n in which every copy of a pattern H sees at least q
/// colors: constructions, verification, exact search, witnesses and
/// growth classification.
#[derive(Debug, Parser)]
#[command(name = "egcolor", version, about)]
pub struct Cli {
    /// Print a JSON document with a run manifest instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(untagged)]
pub enum Command {
    /// Build a coloring of K_n and write it in the coloring file format.
    Construct(ConstructArgs),
    /// Check that every copy of H has at least q colors.
    Verify(VerifyArgs),
    /// Compute f(K_n, H, q) exactly by branch and bound.
    Solve(SolveArgs),
    /// Thresholds and exponents of a pattern, or the growth class at one q.
    Classify(ClassifyArgs),
    /// Growth classes of f(K_n, P_v, q) for a range of v.
    Table(TableArgs),
    /// Run a witness procedure on a coloring and re-check its output.
    Witness(WitnessArgs),
    /// Per-color class statistics of a coloring.
    Stats(StatsArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Construct(_) => "construct",
            Command::Verify(_) => "verify",
            Command::Solve(_) => "solve",
            Command::Classify(_) => "classify",
            Command::Table(_) => "table",
            Command::Witness(_) => "witness",
            Command::Stats(_) => "stats",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Order,
    OrderTweaked,
    Factorization,
    Xor,
    Lll,
    Mono,
    Rainbow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args, Serialize)]
pub struct ConstructArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long)]
    pub n: usize,
    /// Pattern for `lll`: P5, S3, M2, K4 or @file.edges.
    #[arg(long)]
    pub pattern: Option<String>,
    #[arg(long)]
    pub q: Option<usize>,
    /// Palette for `lll`; defaults to ⌈A·n^((v-2)/(e-q+1))⌉.
    #[arg(long)]
    pub palette: Option<usize>,
    /// Leading constant A of the default `lll` palette.
    #[arg(long, default_value_t = 4.0)]
    pub constant: f64,
    /// Required for `lll`.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value_t = 100_000)]
    pub max_resamples: usize,
    /// Output file; stdout if omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Output format; by default JSON for `.json` files, text otherwise.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Args, Serialize)]
pub struct VerifyArgs {
    #[arg(long)]
    pub coloring: PathBuf,
    #[arg(long)]
    pub pattern: String,
    #[arg(long)]
    pub q: usize,
    /// Worker threads for the partitioned scan.
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct SolveArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub pattern: String,
    #[arg(long)]
    pub q: usize,
    /// Largest palette to try.
    #[arg(long)]
    pub kmax: Option<usize>,
    /// Total search-node budget.
    #[arg(long, default_value_t = egcolor::solver::DEFAULT_BUDGET)]
    pub budget: u64,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    /// Write the witness coloring here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
pub struct ClassifyArgs {
    #[arg(long)]
    pub pattern: String,
    #[arg(long)]
    pub q: Option<usize>,
}

#[derive(Debug, Args, Serialize)]
pub struct TableArgs {
    #[arg(long, default_value_t = 3)]
    pub vmin: usize,
    #[arg(long, default_value_t = 12)]
    pub vmax: usize,
    /// Render a markdown table.
    #[arg(long)]
    pub markdown: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Procedure {
    Trichotomy,
    StringMatching,
    Cherries,
    P7,
    EmbedTree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Strict,
    Relaxed,
}

#[derive(Debug, Args, Serialize)]
pub struct WitnessArgs {
    #[arg(long)]
    pub coloring: PathBuf,
    #[arg(long, value_enum)]
    pub procedure: Procedure,
    /// Path length in vertices (7 for `p7`).
    #[arg(long)]
    pub v: usize,
    #[arg(long, value_enum, default_value_t = Mode::Strict)]
    pub mode: Mode,
    /// Tree to embed for `embed-tree`; defaults to P_v.
    #[arg(long)]
    pub pattern: Option<String>,
}

#[derive(Debug, Args, Serialize)]
pub struct StatsArgs {
    #[arg(long)]
    pub coloring: PathBuf,
}
