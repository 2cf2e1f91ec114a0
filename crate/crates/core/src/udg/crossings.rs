use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{circle_intersections, normalize_angle, CircleIntersection, PointSet, Separation, GUARD};
use crate::udg::drawing::{Located, SzekelyDrawing};
use crate::udg::graph::UnitDistanceGraph;

/// One histogram bucket `[lo, hi)`; `hi == None` means unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Bucket {
    pub lo: f64,
    pub hi: Option<f64>,
    pub count: u64,
}

/// Default per-arc bucket edges `{0, n^(2/3) x (1/4, 1/2, 1, 2, 4), inf}`.
pub fn default_bucket_edges(n: usize) -> Vec<f64> {
    let unit = (n as f64).powf(2.0 / 3.0);
    let mut edges = vec![0.0];
    edges.extend([0.25, 0.5, 1.0, 2.0, 4.0].iter().map(|f| f * unit));
    edges.push(f64::INFINITY);
    edges
}

/// Buckets `values` by consecutive `edges`; values outside every bucket are
/// dropped.
pub fn histogram(values: impl IntoIterator<Item = f64>, edges: &[f64]) -> Vec<Bucket> {
    let mut buckets: Vec<Bucket> = edges
        .windows(2)
        .map(|w| Bucket {
            lo: w[0],
            hi: w[1].is_finite().then_some(w[1]),
            count: 0,
        })
        .collect();
    for v in values {
        let slot = edges.partition_point(|&e| e <= v);
        if slot >= 1 && slot < edges.len() {
            buckets[slot - 1].count += 1;
        }
    }
    buckets
}

/// Crossing tallies of a [`SzekelyDrawing`].
#[derive(Debug, Clone, PartialEq)]
pub struct CrossingStats {
    pub total: u64,
    pub per_arc: Vec<u32>,
    /// Nonzero counts keyed by `(p, q)` with `p < q`.
    pub per_circle_pair: BTreeMap<(usize, usize), u32>,
    /// Crossing arc index pairs `(a, b)` with `a < b`, sorted.
    pub crossings: Vec<(usize, usize)>,
    pub histogram: Vec<Bucket>,
}

impl CrossingStats {
    fn from_crossings(
        mut crossings: Vec<(usize, usize)>,
        drawing: &SzekelyDrawing,
        edges: &[f64],
    ) -> Result<Self> {
        crossings.sort_unstable();
        let mut per_arc = vec![0u32; drawing.arcs().len()];
        let mut per_circle_pair = BTreeMap::new();
        for &(a, b) in &crossings {
            per_arc[a] += 1;
            per_arc[b] += 1;
            let (p, q) = (drawing.arcs()[a].circle, drawing.arcs()[b].circle);
            *per_circle_pair.entry((p.min(q), p.max(q))).or_insert(0u32) += 1;
        }
        let total = crossings.len() as u64;
        let stats = Self {
            total,
            histogram: histogram(per_arc.iter().map(|&c| c as f64), edges),
            per_arc,
            per_circle_pair,
            crossings,
        };
        stats.check(drawing.circle_count())?;
        Ok(stats)
    }

    /// Drawing-level invariants: at most two crossings per circle pair, at
    /// most `n(n-1)` in total, per-arc counts summing to twice the total.
    pub fn check(&self, n: usize) -> Result<()> {
        if let Some((pair, c)) = self.per_circle_pair.iter().find(|(_, &c)| c > 2) {
            return Err(Error::InvariantViolation(format!(
                "circle pair {pair:?} has {c} crossings"
            )));
        }
        let cap = (n as u64) * (n as u64).saturating_sub(1);
        if self.total > cap {
            return Err(Error::InvariantViolation(format!(
                "{} crossings exceed n(n-1) = {cap}",
                self.total
            )));
        }
        let arc_sum: u64 = self.per_arc.iter().map(|&c| c as u64).sum();
        if arc_sum != 2 * self.total {
            return Err(Error::InvariantViolation(format!(
                "per-arc sum {arc_sum} != 2 x {}",
                self.total
            )));
        }
        Ok(())
    }
}

/// Center pairs `(p, q)`, `p < q`, whose unit circles cross, found with a
/// uniform grid of cell side 2.
pub fn crossing_circle_pairs<S: PointSet + ?Sized>(set: &S, only: &[bool]) -> Vec<(usize, usize)> {
    let n = set.len();
    let cell = |p: [f64; 2]| ((p[0] / 2.0).floor() as i64, (p[1] / 2.0).floor() as i64);
    let mut grid: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
    for i in (0..n).filter(|&i| only[i]) {
        grid.entry(cell(set.position(i))).or_default().push(i);
    }
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .into_par_iter()
        .filter(|&p| only[p])
        .flat_map_iter(|p| {
            let (cx, cy) = cell(set.position(p));
            let mut out = Vec::new();
            for dx in -1..=1 {
                for dy in -1..=1 {
                    if let Some(members) = grid.get(&(cx + dx, cy + dy)) {
                        out.extend(
                            members
                                .iter()
                                .filter(|&&q| q > p && set.separation(p, q) == Separation::Crossing)
                                .map(|&q| (p, q)),
                        );
                    }
                }
            }
            out
        })
        .collect();
    pairs.sort_unstable();
    pairs
}

/// The non-vertex intersection points of `C(p)` and `C(q)`: intersection
/// points matched to a common unit-neighbor are dropped.
pub(crate) fn free_intersections<S: PointSet + ?Sized>(
    set: &S,
    graph: &UnitDistanceGraph,
    p: usize,
    q: usize,
) -> Result<Vec<[f64; 2]>> {
    let pts = match circle_intersections(set.position(p), set.position(q))
        .map_err(|_| Error::CoincidentCenters)?
    {
        CircleIntersection::Two(a, b) => vec![a, b],
        CircleIntersection::Tangent(_) => return Err(Error::NearTangent { p, q }),
        CircleIntersection::None => return Ok(vec![]),
    };
    let mut is_vertex = [false; 2];
    for v in graph.common_neighbors(p, q) {
        let pv = set.position(v);
        let d = |x: [f64; 2]| (x[0] - pv[0]).hypot(x[1] - pv[1]);
        let nearest = if d(pts[0]) <= d(pts[1]) { 0 } else { 1 };
        is_vertex[nearest] = true;
    }
    Ok(pts
        .into_iter()
        .zip(is_vertex)
        .filter(|(_, v)| !v)
        .map(|(x, _)| x)
        .collect())
}

/// Angle of point `x` seen from center `p`.
pub(crate) fn angle_of<S: PointSet + ?Sized>(set: &S, p: usize, x: [f64; 2]) -> f64 {
    let c = set.position(p);
    normalize_angle((x[1] - c[1]).atan2(x[0] - c[0]))
}

/// Counts arc-interior crossings of the drawing.
pub fn count_crossings<S: PointSet + ?Sized>(
    graph: &UnitDistanceGraph,
    drawing: &SzekelyDrawing,
    set: &S,
) -> Result<CrossingStats> {
    count_crossings_with_edges(graph, drawing, set, &default_bucket_edges(set.len()))
}

pub fn count_crossings_with_edges<S: PointSet + ?Sized>(
    graph: &UnitDistanceGraph,
    drawing: &SzekelyDrawing,
    set: &S,
    bucket_edges: &[f64],
) -> Result<CrossingStats> {
    let drawn: Vec<bool> = (0..set.len()).map(|p| drawing.k(p) >= 2).collect();
    let pairs = crossing_circle_pairs(set, &drawn);
    let per_pair: Vec<Vec<(usize, usize)>> = pairs
        .par_iter()
        .map(|&(p, q)| {
            let mut out = Vec::with_capacity(2);
            for x in free_intersections(set, graph, p, q)? {
                let slot_p = match drawing.roster(p).locate(angle_of(set, p, x), GUARD) {
                    Located::Interior(j) => j,
                    Located::Endpoint(e) => {
                        return Err(Error::CrossingNearEndpoint { p, other: q, on: p, endpoint: e })
                    }
                };
                let slot_q = match drawing.roster(q).locate(angle_of(set, q, x), GUARD) {
                    Located::Interior(j) => j,
                    Located::Endpoint(e) => {
                        return Err(Error::CrossingNearEndpoint { p, other: q, on: q, endpoint: e })
                    }
                };
                let (a, b) = (drawing.arc_at(p, slot_p), drawing.arc_at(q, slot_q));
                out.push((a.min(b), a.max(b)));
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    CrossingStats::from_crossings(per_pair.into_iter().flatten().collect(), drawing, bucket_edges)
}

/// Crossings between the full circle `C(x)` and the interior of arc `arc`.
///
/// `None` when an intersection point falls within the guard band of one of
/// the arc's endpoints (a boundary case).
pub fn circle_arc_crossings<S: PointSet + ?Sized>(
    set: &S,
    drawing: &SzekelyDrawing,
    arc: usize,
    x: usize,
) -> Option<u32> {
    let a = drawing.arcs()[arc];
    if x == a.circle {
        return Some(0);
    }
    let pts = match circle_intersections(set.position(a.circle), set.position(x)).ok()? {
        CircleIntersection::None => return Some(0),
        CircleIntersection::Tangent(t) => vec![t],
        CircleIntersection::Two(s, t) => vec![s, t],
    };
    let mut count = 0;
    for pt in pts {
        let off = crate::geom::ccw_sweep(a.start, angle_of(set, a.circle, pt));
        if off <= GUARD || off >= std::f64::consts::TAU - GUARD || (off - a.sweep).abs() <= GUARD {
            return None;
        }
        if off < a.sweep {
            count += 1;
        }
    }
    Some(count)
}
