//! The canonical point file: `{"backend": "exact" | "float" | "rational", ...}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::point_set::{AnyPointSet, ExactPointSet, FloatPointSet};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "backend", rename_all = "lowercase")]
pub enum PointFile {
    /// Integer coordinates embedded at `(x, y) / sqrt(scale)`.
    Exact { scale: i64, points: Vec<[i64; 2]> },
    Float {
        tolerance: f64,
        points: Vec<[f64; 2]>,
    },
    /// `[x_num, x_den, y_num, y_den]` per point; consumed by the incidence tools.
    Rational { points: Vec<[i64; 4]> },
}

impl PointFile {
    pub fn parse(text: &str) -> Result<Self> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        let backend = value
            .get("backend")
            .ok_or_else(|| Error::Format("missing field `backend`".into()))?
            .as_str()
            .ok_or_else(|| Error::Format("field `backend`: expected a string".into()))?
            .to_owned();
        match backend.as_str() {
            "exact" => {
                let b: ExactBody = typed(value)?;
                Ok(PointFile::Exact {
                    scale: b.scale,
                    points: b.points,
                })
            }
            "float" => {
                let b: FloatBody = typed(value)?;
                Ok(PointFile::Float {
                    tolerance: b.tolerance,
                    points: b.points,
                })
            }
            "rational" => {
                let b: RationalBody = typed(value)?;
                Ok(PointFile::Rational { points: b.points })
            }
            other => Err(Error::Format(format!(
                "field `backend`: unknown backend `{other}` (expected exact, float or rational)"
            ))),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("point file serializes")
    }

    pub fn backend(&self) -> &'static str {
        match self {
            PointFile::Exact { .. } => "exact",
            PointFile::Float { .. } => "float",
            PointFile::Rational { .. } => "rational",
        }
    }

    /// Builds the in-memory set for the unit-distance tools.
    pub fn into_point_set(self) -> Result<AnyPointSet> {
        match self {
            PointFile::Exact { scale, points } => {
                Ok(AnyPointSet::Exact(ExactPointSet::new(scale, points)?))
            }
            PointFile::Float { tolerance, points } => {
                Ok(AnyPointSet::Float(FloatPointSet::new(points, tolerance)?))
            }
            PointFile::Rational { .. } => Err(Error::Format(
                "field `backend`: rational point files are only accepted by the incidence tools"
                    .into(),
            )),
        }
    }
}

#[derive(Deserialize)]
struct ExactBody {
    scale: i64,
    points: Vec<[i64; 2]>,
}

#[derive(Deserialize)]
struct FloatBody {
    tolerance: f64,
    points: Vec<[f64; 2]>,
}

#[derive(Deserialize)]
struct RationalBody {
    points: Vec<[i64; 4]>,
}

/// Deserializes with the offending field path in the error message.
pub(crate) fn typed<T: serde::de::DeserializeOwned>(value: serde_json::Value) -> Result<T> {
    serde_path_to_error::deserialize(value).map_err(|e| {
        let path = e.path().to_string();
        if path == "." {
            Error::Format(e.inner().to_string())
        } else {
            Error::Format(format!("field `{path}`: {}", e.inner()))
        }
    })
}

impl From<&AnyPointSet> for PointFile {
    fn from(set: &AnyPointSet) -> Self {
        match set {
            AnyPointSet::Exact(s) => PointFile::Exact {
                scale: s.scale(),
                points: s.points().to_vec(),
            },
            AnyPointSet::Float(s) => PointFile::Float {
                tolerance: s.tolerance(),
                points: s.points().to_vec(),
            },
        }
    }
}
