use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(name = "epl", version, about = "Unit-distance, lune and incidence experiments")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a generated point set (and, for st_grid, its lines).
    Generate(GenerateArgs),
    /// Unit-distance graph, arc drawing and crossing statistics.
    AnalyzeUdg(UdgArgs),
    /// Lune populations and the typical-point census.
    AnalyzeLunes(LunesArgs),
    /// Square selection, minimal strip, radius search and pruning.
    Prune(PruneArgs),
    /// Incidences, segment crossings, duality and propellers.
    AnalyzeIncidence(IncidenceArgs),
    /// Chord bounds and remainder scans for the arc-triangle estimates.
    ValidateTrig(TrigArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Generate(_) => "generate",
            Command::AnalyzeUdg(_) => "analyze-udg",
            Command::AnalyzeLunes(_) => "analyze-lunes",
            Command::Prune(_) => "prune",
            Command::AnalyzeIncidence(_) => "analyze-incidence",
            Command::ValidateTrig(_) => "validate-trig",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[value(rename_all = "snake_case")]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    GridLattice,
    StGrid,
    RandomDisk,
    Cocircular,
    MoserSpindle,
    TwoCluster,
}

#[derive(Debug, Args, Serialize)]
pub struct GenerateArgs {
    #[arg(long, value_enum)]
    pub kind: Kind,
    /// Side length for grid_lattice and st_grid.
    #[arg(long)]
    pub k: Option<usize>,
    /// Point count for random_disk, cocircular and two_cluster.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: PathBuf,
    /// Lines file for st_grid; defaults to `<out>.lines`.
    #[arg(long)]
    pub lines_out: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
pub struct InputArgs {
    /// Point file (exact or float backend).
    #[arg(long)]
    pub input: PathBuf,
    /// Overrides the tolerance of a float point file.
    #[arg(long)]
    pub tolerance: Option<f64>,
}

#[derive(Debug, Args, Serialize)]
pub struct UdgArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long)]
    pub report: PathBuf,
    /// Per-arc crossing histogram as CSV rows `lo,hi,count`.
    #[arg(long)]
    pub histogram_csv: Option<PathBuf>,
    /// Comma-separated bucket edges; `inf` closes the last bucket.
    #[arg(long, value_delimiter = ',')]
    pub buckets: Option<Vec<f64>>,
    #[arg(long, default_value_t = 1.0)]
    pub t1: f64,
    #[arg(long, default_value_t = 1.0)]
    pub t2: f64,
    #[arg(long = "window-a", default_value_t = 0.5)]
    pub a: f64,
    #[arg(long = "window-b", default_value_t = 2.0)]
    pub b: f64,
}

#[derive(Debug, Args, Serialize)]
pub struct TypicalArgs {
    #[arg(long, default_value_t = 0.1)]
    pub c4: f64,
    #[arg(long, default_value_t = 0.0)]
    pub c5: f64,
    #[arg(long, default_value_t = 1.0)]
    pub c5p: f64,
}

#[derive(Debug, Args, Serialize)]
pub struct LunesArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long)]
    pub report: PathBuf,
    #[command(flatten)]
    pub typical: TypicalArgs,
    /// Census rows `point_index,k,qualifying_pairs,is_typical`.
    #[arg(long)]
    pub census_csv: Option<PathBuf>,
    /// Also check arc crossings against lune membership.
    #[arg(long)]
    pub cross_validate: bool,
}

#[derive(Debug, Args, Serialize)]
pub struct PruneArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long)]
    pub c7: f64,
    #[arg(long)]
    pub c8: f64,
    /// Take the strip over all unit pairs instead of a selected square pair.
    #[arg(long)]
    pub skip_squares: bool,
    #[arg(long)]
    pub report: PathBuf,
    #[command(flatten)]
    pub typical: TypicalArgs,
    /// Removal log rows `point,circle,pass,lost_pairs`.
    #[arg(long)]
    pub removals_csv: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
pub struct IncidenceArgs {
    /// Rational point file, or an exact file with scale 1.
    #[arg(long)]
    pub points: PathBuf,
    #[arg(long)]
    pub lines: PathBuf,
    /// Compare incidences with those of the dual configuration.
    #[arg(long)]
    pub dual: bool,
    /// Translate by the first `(k, k^2)` that makes the input dualizable.
    #[arg(long)]
    pub auto_translate: bool,
    /// Run the propeller census for points on at least this many lines.
    #[arg(long)]
    pub propeller: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub window_lo: usize,
    #[arg(long)]
    pub window_hi: Option<usize>,
    #[arg(long)]
    pub report: PathBuf,
}

#[derive(Debug, Args, Serialize)]
pub struct TrigArgs {
    #[arg(long, default_value_t = 100_000)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Caps `alpha,beta,theta` of the scanned box; pi/100 each by default.
    #[arg(long, value_delimiter = ',')]
    pub caps: Option<Vec<f64>>,
    #[arg(long)]
    pub report: PathBuf,
}
