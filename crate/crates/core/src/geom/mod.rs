//! Exact and floating primitives: point sets, unit circles, arcs and lunes.

mod circle;
pub mod io;
mod lune;
mod point_set;

pub use circle::{
    angle_about, arc_distance, ccw_sweep, circle_intersections, meeting_angle, normalize_angle,
    ArcEdge, Circle, CircleIntersection, GUARD,
};
pub use lune::{in_lune_exact, Lune};
pub use point_set::{
    AnyPointSet, ExactPointSet, FloatPointSet, PointSet, Separation, DEFAULT_TOLERANCE,
};
