//! Square pair selection, minimal strip, radius pruning and the final checks.

mod algo;
mod epsilon;
mod pipeline;
mod squares;
mod strip;
mod summary;

pub use algo::{prune, PruneResult, Removal};
pub use epsilon::{find_epsilon, grid_check, EpsilonSearch, GridCheck};
pub use pipeline::{run_pipeline, EpsilonSummary, PipelineConstants, PipelineReport, SelectionSummary};
pub use squares::{
    cell_center, cell_of, cross_counts, normalize_pair, square_decompose_and_select, Cell,
    NormalizedPair, SquarePairSelection, CELL_SIDE,
};
pub use strip::{min_strip, min_strip_pairs, StripResult};
pub use summary::{summary_checks, ClosestPair, SummaryChecks, ANGLE_TOLERANCE};
