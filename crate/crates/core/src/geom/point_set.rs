use std::collections::HashSet;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Default unit-distance tolerance for float point sets.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// How two unit circles relate, decided from their center separation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Separation {
    Coincident,
    /// `0 < |p - q| < 2`: two intersection points.
    Crossing,
    /// `|p - q| = 2`.
    Tangent,
    Disjoint,
}

/// Read access shared by the exact and float backends.
///
/// Predicates are exact on [`ExactPointSet`] and tolerance-guarded on
/// [`FloatPointSet`]. Index arguments are not range checked.
pub trait PointSet: Sync {
    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Embedded coordinates of point `i`.
    fn position(&self, i: usize) -> [f64; 2];

    /// Vector from `from` to `to`, up to a common positive scale factor.
    fn direction(&self, from: usize, to: usize) -> [f64; 2] {
        let (a, b) = (self.position(from), self.position(to));
        [b[0] - a[0], b[1] - a[1]]
    }

    fn unit_pair(&self, i: usize, j: usize) -> bool;

    /// Whether point `i` lies strictly inside the unit disk about `center`.
    fn strictly_inside(&self, i: usize, center: usize) -> bool;

    fn separation(&self, i: usize, j: usize) -> Separation;
}

/// Integer points with a global scale `s`: record `(x, y)` embeds at
/// `(x / sqrt(s), y / sqrt(s))`, so unit distance is `dx^2 + dy^2 == s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactPointSet {
    scale: i64,
    points: Vec<[i64; 2]>,
}

impl ExactPointSet {
    pub fn new(scale: i64, points: Vec<[i64; 2]>) -> Result<Self> {
        if scale < 1 {
            return Err(Error::InvalidSet(format!("scale must be >= 1, got {scale}")));
        }
        let mut seen = HashSet::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            if !seen.insert(*p) {
                return Err(Error::InvalidSet(format!(
                    "point {i} duplicates ({}, {})",
                    p[0], p[1]
                )));
            }
        }
        Ok(Self { scale, points })
    }

    pub fn scale(&self) -> i64 {
        self.scale
    }

    pub fn points(&self) -> &[[i64; 2]] {
        &self.points
    }

    fn check(&self, i: usize) -> Result<()> {
        if i >= self.points.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.points.len(),
            });
        }
        Ok(())
    }

    fn check_pair(&self, i: usize, j: usize) -> Result<()> {
        self.check(i)?;
        self.check(j)?;
        if i == j {
            return Err(Error::SameIndex(i));
        }
        Ok(())
    }

    /// Unscaled squared distance `dx^2 + dy^2`.
    #[inline]
    pub fn dist2_raw(&self, i: usize, j: usize) -> i128 {
        let (a, b) = (self.points[i], self.points[j]);
        let dx = (a[0] - b[0]) as i128;
        let dy = (a[1] - b[1]) as i128;
        dx * dx + dy * dy
    }

    /// Exact squared embedded distance `(dx^2 + dy^2) / s`.
    pub fn dist2_scaled(&self, i: usize, j: usize) -> Result<Ratio<i128>> {
        self.check_pair(i, j)?;
        Ok(Ratio::new(self.dist2_raw(i, j), self.scale as i128))
    }

    pub fn is_unit_pair(&self, i: usize, j: usize) -> Result<bool> {
        self.check_pair(i, j)?;
        Ok(self.dist2_raw(i, j) == self.scale as i128)
    }
}

impl PointSet for ExactPointSet {
    fn len(&self) -> usize {
        self.points.len()
    }

    fn position(&self, i: usize) -> [f64; 2] {
        let r = (self.scale as f64).sqrt();
        let p = self.points[i];
        [p[0] as f64 / r, p[1] as f64 / r]
    }

    fn direction(&self, from: usize, to: usize) -> [f64; 2] {
        let (a, b) = (self.points[from], self.points[to]);
        [(b[0] - a[0]) as f64, (b[1] - a[1]) as f64]
    }

    fn unit_pair(&self, i: usize, j: usize) -> bool {
        i != j && self.dist2_raw(i, j) == self.scale as i128
    }

    fn strictly_inside(&self, i: usize, center: usize) -> bool {
        self.dist2_raw(i, center) < self.scale as i128
    }

    fn separation(&self, i: usize, j: usize) -> Separation {
        let d2 = self.dist2_raw(i, j);
        let four_s = 4 * self.scale as i128;
        match d2 {
            0 => Separation::Coincident,
            _ if d2 < four_s => Separation::Crossing,
            _ if d2 == four_s => Separation::Tangent,
            _ => Separation::Disjoint,
        }
    }
}

/// Real-coordinate points; unit distance means `|dist - 1| <= tolerance`.
#[derive(Debug, Clone, PartialEq)]
pub struct FloatPointSet<T> {
    points: Vec<[T; 2]>,
    tolerance: T,
}

impl<T: Real> FloatPointSet<T> {
    pub fn new(points: Vec<[T; 2]>, tolerance: T) -> Result<Self> {
        if !(tolerance > T::zero()) || !tolerance.is_finite() {
            return Err(Error::InvalidSet(format!(
                "tolerance must be a positive finite number, got {tolerance}"
            )));
        }
        if let Some(i) = points
            .iter()
            .position(|p| !p[0].is_finite() || !p[1].is_finite())
        {
            return Err(Error::InvalidSet(format!("point {i} is not finite")));
        }
        let set = Self { points, tolerance };
        // sort by x so the distinctness scan only compares nearby points
        let mut order: Vec<usize> = (0..set.points.len()).collect();
        order.sort_by(|&a, &b| set.points[a][0].partial_cmp(&set.points[b][0]).unwrap());
        for (k, &i) in order.iter().enumerate() {
            for &j in &order[k + 1..] {
                if set.points[j][0] - set.points[i][0] > tolerance {
                    break;
                }
                if set.dist(i, j) <= tolerance {
                    return Err(Error::InvalidSet(format!(
                        "points {} and {} coincide within tolerance",
                        i.min(j),
                        i.max(j)
                    )));
                }
            }
        }
        Ok(set)
    }

    pub fn points(&self) -> &[[T; 2]] {
        &self.points
    }

    pub fn tolerance(&self) -> T {
        self.tolerance
    }

    #[inline]
    pub fn dist(&self, i: usize, j: usize) -> T {
        let (a, b) = (self.points[i], self.points[j]);
        (a[0] - b[0]).hypot(a[1] - b[1])
    }

    pub fn is_unit_pair(&self, i: usize, j: usize) -> Result<bool> {
        let len = self.points.len();
        for k in [i, j] {
            if k >= len {
                return Err(Error::IndexOutOfRange { index: k, len });
            }
        }
        if i == j {
            return Err(Error::SameIndex(i));
        }
        Ok(PointSet::unit_pair(self, i, j))
    }

    /// Subset in the given index order.
    pub fn select(&self, indices: &[usize]) -> Self {
        Self {
            points: indices.iter().map(|&i| self.points[i]).collect(),
            tolerance: self.tolerance,
        }
    }
}

impl<T: Real> PointSet for FloatPointSet<T> {
    fn len(&self) -> usize {
        self.points.len()
    }

    fn position(&self, i: usize) -> [f64; 2] {
        let p = self.points[i];
        [p[0].to_f64().unwrap(), p[1].to_f64().unwrap()]
    }

    fn unit_pair(&self, i: usize, j: usize) -> bool {
        i != j && (self.dist(i, j) - T::one()).abs() <= self.tolerance
    }

    fn strictly_inside(&self, i: usize, center: usize) -> bool {
        self.dist(i, center) < T::one() - self.tolerance
    }

    fn separation(&self, i: usize, j: usize) -> Separation {
        let d = self.dist(i, j);
        let two = T::lit(2.0);
        if d <= self.tolerance {
            Separation::Coincident
        } else if (d - two).abs() <= self.tolerance {
            Separation::Tangent
        } else if d < two {
            Separation::Crossing
        } else {
            Separation::Disjoint
        }
    }
}

/// Either backend, as loaded from a point file.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyPointSet {
    Exact(ExactPointSet),
    Float(FloatPointSet<f64>),
}

macro_rules! delegate {
    ($self:ident, $s:ident => $e:expr) => {
        match $self {
            AnyPointSet::Exact($s) => $e,
            AnyPointSet::Float($s) => $e,
        }
    };
}

impl AnyPointSet {
    pub fn backend(&self) -> &'static str {
        match self {
            AnyPointSet::Exact(_) => "exact",
            AnyPointSet::Float(_) => "float",
        }
    }

    /// Subset in the given index order, keeping the backend.
    pub fn select(&self, indices: &[usize]) -> AnyPointSet {
        match self {
            AnyPointSet::Exact(s) => AnyPointSet::Exact(ExactPointSet {
                scale: s.scale,
                points: indices.iter().map(|&i| s.points[i]).collect(),
            }),
            AnyPointSet::Float(s) => AnyPointSet::Float(s.select(indices)),
        }
    }
}

impl PointSet for AnyPointSet {
    fn len(&self) -> usize {
        delegate!(self, s => s.len())
    }
    fn position(&self, i: usize) -> [f64; 2] {
        delegate!(self, s => s.position(i))
    }
    fn direction(&self, from: usize, to: usize) -> [f64; 2] {
        delegate!(self, s => s.direction(from, to))
    }
    fn unit_pair(&self, i: usize, j: usize) -> bool {
        delegate!(self, s => s.unit_pair(i, j))
    }
    fn strictly_inside(&self, i: usize, center: usize) -> bool {
        delegate!(self, s => s.strictly_inside(i, center))
    }
    fn separation(&self, i: usize, j: usize) -> Separation {
        delegate!(self, s => s.separation(i, j))
    }
}

impl From<ExactPointSet> for AnyPointSet {
    fn from(s: ExactPointSet) -> Self {
        AnyPointSet::Exact(s)
    }
}

impl From<FloatPointSet<f64>> for AnyPointSet {
    fn from(s: FloatPointSet<f64>) -> Self {
        AnyPointSet::Float(s)
    }
}
