use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("index {index} out of range for a set of {len} points")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("expected two distinct indices, got {0} twice")]
    SameIndex(usize),

    #[error("invalid point set: {0}")]
    InvalidSet(String),

    #[error("circle centers coincide")]
    CoincidentCenters,

    #[error("lune ({q}, {r}) requires center separation strictly between 0 and 2")]
    DegenerateLune { q: usize, r: usize },

    #[error("point {x} is not at unit distance from center {p}")]
    NotOnCircle { p: usize, x: usize },

    #[error("angular tie on circle {p}: points {q} and {r} lie within the guard band")]
    AngularTie { p: usize, q: usize, r: usize },

    #[error("circles {p} and {other} meet within the guard band of arc endpoint {endpoint} on circle {on}")]
    CrossingNearEndpoint {
        p: usize,
        other: usize,
        on: usize,
        endpoint: usize,
    },

    #[error("circles {p} and {q} are tangent within the guard band but not exactly")]
    NearTangent { p: usize, q: usize },

    #[error("circle {p} carries {k} points, at least 2 are required")]
    EmptyCircle { p: usize, k: usize },

    #[error("no unit pair joins two distinct cells")]
    NoCrossPair,

    #[error("infeasible threshold: {0}")]
    Infeasible(String),

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("not dualizable: {0}")]
    NotDualizable(String),

    #[error("degenerate betweenness query: {0}")]
    DegenerateBetweenness(String),

    #[error("sampling domain is empty")]
    EmptyDomain,

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),

    #[error("malformed input: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameter {
        name,
        reason: reason.into(),
    }
}
