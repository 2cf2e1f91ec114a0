//! Unit-distance graph, its circular-arc drawing, and crossing statistics.

mod census;
mod crossings;
mod drawing;
mod graph;

pub use census::{
    crossing_lemma_check, heavy_circle_census, CensusThresholds, HeavyCensus, LemmaCheck,
    LemmaEval, UdgReport,
};
pub use crossings::{
    circle_arc_crossings, count_crossings, count_crossings_with_edges, crossing_circle_pairs,
    default_bucket_edges, histogram, Bucket, CrossingStats,
};
pub use drawing::{build_drawing, Located, Roster, SzekelyDrawing};
pub use graph::{build_udg, UnitDistanceGraph};
