//! Finite experiments on unit-distance graphs and point-line incidences:
//! circular-arc drawings and their crossings, lune censuses, the strip and
//! radius pruning pipeline, exact duality, and numerical audits of the
//! supporting trigonometric estimates.
//!
//! Geometry that must be counted exactly (unit pairs, lune membership,
//! incidences) runs on integers or rationals; arc angles and circle
//! intersections run in floating point with a guard band.

pub mod error;
pub mod gen;
pub mod geom;
pub mod incidence;
pub mod lunes;
pub mod prune;
pub mod report;
pub mod scalar;
pub mod trig;
pub mod udg;

pub use error::{Error, Result};

/// Arbitrary-precision rationals, the default for the incidence tools.
pub type Rational = num_rational::BigRational;
/// Fixed-width rationals for small inputs.
pub type SmallRational = num_rational::Ratio<i128>;
pub type Point = incidence::RationalPoint<Rational>;
pub type Line = incidence::RationalLine<Rational>;
pub type FloatSet = geom::FloatPointSet<f64>;
pub type FloatSet32 = geom::FloatPointSet<f32>;
