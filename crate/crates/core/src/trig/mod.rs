//! Chord bounds, the curvilinear triangle estimate and its numerical audit.

mod chord;
mod curvtri;
mod scan;

pub use chord::{chord, chord_bounds_check, ChordBounds};
pub use curvtri::{curvtri_eval, thirdarc_classify, CurvTriEval, CurvTriInstance, Regime, ThirdArc};
pub use scan::{
    calibrate, remainder_scan, Calibration, DomainCaps, Extreme, Family, ScanReport,
    CALIBRATION_SAMPLES, CALIBRATION_SEED, C_THIRD, C_X, C_Y, SAFETY_FACTOR,
};
