use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::geom::point_set::PointSet;
use crate::scalar::Real;

/// Guard band for angular and tangency decisions in double precision.
pub const GUARD: f64 = 1e-9;

/// A unit circle, identified with its center point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Circle {
    pub center: usize,
}

/// Intersection of two unit circles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CircleIntersection<T> {
    None,
    Tangent([T; 2]),
    /// The first point lies to the left of the directed segment `p -> q`.
    Two([T; 2], [T; 2]),
}

impl<T: Copy> CircleIntersection<T> {
    pub fn points(&self) -> Vec<[T; 2]> {
        match *self {
            CircleIntersection::None => vec![],
            CircleIntersection::Tangent(a) => vec![a],
            CircleIntersection::Two(a, b) => vec![a, b],
        }
    }
}

/// Intersects the unit circles centered at `p` and `q`.
///
/// Separations within [`GUARD`] of 2 are reported as tangent.
pub fn circle_intersections<T: Real>(p: [T; 2], q: [T; 2]) -> Result<CircleIntersection<T>> {
    let (dx, dy) = (q[0] - p[0], q[1] - p[1]);
    let d = dx.hypot(dy);
    if d == T::zero() {
        return Err(Error::CoincidentCenters);
    }
    let two = T::lit(2.0);
    let half = T::lit(0.5);
    let guard = T::lit(GUARD);
    if (d - two).abs() <= guard {
        return Ok(CircleIntersection::Tangent([
            p[0] + dx * half,
            p[1] + dy * half,
        ]));
    }
    if d > two {
        return Ok(CircleIntersection::None);
    }
    let a = d * half;
    let h = ((T::one() - a) * (T::one() + a)).sqrt();
    let (mx, my) = (p[0] + dx * half, p[1] + dy * half);
    let (ux, uy) = (-dy / d, dx / d);
    Ok(CircleIntersection::Two(
        [mx + h * ux, my + h * uy],
        [mx - h * ux, my - h * uy],
    ))
}

/// Maps an angle into `[0, 2pi)`.
#[inline]
pub fn normalize_angle(a: f64) -> f64 {
    let r = a.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Counterclockwise sweep from `from` to `to`, in `[0, 2pi)`.
#[inline]
pub fn ccw_sweep(from: f64, to: f64) -> f64 {
    normalize_angle(to - from)
}

/// Angle in `[0, 2pi)` of `x` as seen from `p`.
#[inline]
pub fn angle_about<S: PointSet + ?Sized>(set: &S, p: usize, x: usize) -> f64 {
    let v = set.direction(p, x);
    normalize_angle(v[1].atan2(v[0]))
}

fn check_on_circle<S: PointSet + ?Sized>(set: &S, p: usize, x: usize) -> Result<()> {
    let len = set.len();
    for k in [p, x] {
        if k >= len {
            return Err(Error::IndexOutOfRange { index: k, len });
        }
    }
    if !set.unit_pair(p, x) {
        return Err(Error::NotOnCircle { p, x });
    }
    Ok(())
}

/// Angle at which `C(x)` and `C(y)` meet at their common point `p`.
///
/// Both `x` and `y` must lie on `C(p)`; the value is the angular separation
/// of `x` and `y` seen from `p`, folded into `[0, pi]`.
pub fn meeting_angle<S: PointSet + ?Sized>(set: &S, p: usize, x: usize, y: usize) -> Result<f64> {
    check_on_circle(set, p, x)?;
    check_on_circle(set, p, y)?;
    if x == y {
        return Ok(0.0);
    }
    let diff = (angle_about(set, p, x) - angle_about(set, p, y)).abs();
    Ok(if diff > PI { TAU - diff } else { diff })
}

/// Shorter arc length between `x` and `y` on `C(p)`, computed from the
/// cross and dot products of the two radius vectors.
pub fn arc_distance<S: PointSet + ?Sized>(set: &S, p: usize, x: usize, y: usize) -> Result<f64> {
    check_on_circle(set, p, x)?;
    check_on_circle(set, p, y)?;
    let (u, v) = (set.direction(p, x), set.direction(p, y));
    let cross = u[0] * v[1] - u[1] * v[0];
    let dot = u[0] * v[0] + u[1] * v[1];
    Ok(cross.abs().atan2(dot))
}

/// An arc of `C(circle)` running counterclockwise from `endpoints.0` to
/// `endpoints.1`; the half-open interval `[start, start + sweep)` holds no
/// other set point of the circle in its interior.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArcEdge {
    pub circle: usize,
    pub endpoints: (usize, usize),
    pub start: f64,
    pub sweep: f64,
}

impl ArcEdge {
    pub fn end(&self) -> f64 {
        normalize_angle(self.start + self.sweep)
    }

    /// Whether angle `a` lies strictly inside the arc, at least `guard`
    /// away from both endpoints.
    pub fn contains_interior(&self, a: f64, guard: f64) -> bool {
        let off = ccw_sweep(self.start, a);
        off > guard && off < self.sweep - guard
    }
}
