//! Exact point-line incidences, the segment drawing, duality and the
//! propeller census.

mod duality;
pub mod io;
mod propeller;
mod segments;
mod structure;
mod types;

pub use duality::{
    dualizable_part, dualize_configuration, dualize_line, dualize_point, find_translation,
    translate, DualFilter,
};
pub use propeller::{
    betweenness_check, orientation_consistent, propeller_census, Betweenness, PropellerCensus,
    PropellerConfig, PropellerEntry,
};
pub use segments::{build_segment_drawing, Segment, SegmentDrawing};
pub use structure::{count_incidences, sharpness, st_bound_check, IncidenceStructure, SharpnessReport, StBound};
pub use types::{RationalLine, RationalPoint};
