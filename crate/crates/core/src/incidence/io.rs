use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::io::{typed, PointFile};
use crate::incidence::types::{RationalLine, RationalPoint};
use crate::scalar::ExactScalar;

/// `{"lines": [[a_num, a_den, b_num, b_den, c_num, c_den], ...]}` for lines
/// `a x + b y = c`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinesFile {
    pub lines: Vec<[i64; 6]>,
}

fn ratio<Q: ExactScalar>(num: i64, den: i64, what: &str) -> Result<Q> {
    Q::from_parts(num, den).ok_or_else(|| Error::Format(format!("{what}: zero denominator")))
}

impl LinesFile {
    pub fn parse(text: &str) -> Result<Self> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        typed(value)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("lines file serializes")
    }

    pub fn to_lines<Q: ExactScalar>(&self) -> Result<Vec<RationalLine<Q>>> {
        self.lines
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let at = format!("field `lines[{i}]`");
                RationalLine::new(
                    ratio(v[0], v[1], &at)?,
                    ratio(v[2], v[3], &at)?,
                    ratio(v[4], v[5], &at)?,
                )
                .map_err(|_| Error::Format(format!("{at}: a = b = 0")))
            })
            .collect()
    }

    pub fn from_lines<Q: ExactScalar>(lines: &[RationalLine<Q>]) -> Result<Self> {
        let lines = lines
            .iter()
            .map(|l| {
                let (a, b, c) = l.coefficients();
                let mut out = [0; 6];
                for (k, v) in [a, b, c].into_iter().enumerate() {
                    let (n, d) = v
                        .to_parts()
                        .ok_or_else(|| Error::Format("coefficient exceeds i64".into()))?;
                    out[2 * k] = n;
                    out[2 * k + 1] = d;
                }
                Ok(out)
            })
            .collect::<Result<_>>()?;
        Ok(Self { lines })
    }
}

/// Rational points of a point file: the rational backend, or integer points
/// of an exact file with scale 1.
pub fn rational_points<Q: ExactScalar>(file: &PointFile) -> Result<Vec<RationalPoint<Q>>> {
    match file {
        PointFile::Rational { points } => points
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let at = format!("field `points[{i}]`");
                Ok(RationalPoint::new(ratio(v[0], v[1], &at)?, ratio(v[2], v[3], &at)?))
            })
            .collect(),
        PointFile::Exact { scale: 1, points } => {
            Ok(points.iter().map(|p| RationalPoint::from_ints(p[0], p[1])).collect())
        }
        other => Err(Error::Format(format!(
            "field `backend`: incidence tools need rational points, got `{}`",
            other.backend()
        ))),
    }
}

pub fn rational_point_file<Q: ExactScalar>(points: &[RationalPoint<Q>]) -> Result<PointFile> {
    let points = points
        .iter()
        .map(|p| {
            let (xn, xd) = p.x.to_parts().ok_or_else(|| Error::Format("coordinate exceeds i64".into()))?;
            let (yn, yd) = p.y.to_parts().ok_or_else(|| Error::Format("coordinate exceeds i64".into()))?;
            Ok([xn, xd, yn, yd])
        })
        .collect::<Result<_>>()?;
    Ok(PointFile::Rational { points })
}
