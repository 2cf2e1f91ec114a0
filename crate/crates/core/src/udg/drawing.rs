use std::f64::consts::TAU;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::geom::{angle_about, ccw_sweep, ArcEdge, PointSet, GUARD};
use crate::udg::graph::UnitDistanceGraph;

/// Unit-neighbors of one center, sorted by angle in `[0, 2pi)`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Roster {
    pub points: Vec<usize>,
    pub angles: Vec<f64>,
}

impl Roster {
    /// Sorts the unit-neighbors of `p` by angle and rejects angular ties.
    pub fn build<S: PointSet + ?Sized>(
        set: &S,
        graph: &UnitDistanceGraph,
        p: usize,
    ) -> Result<Self> {
        let mut entries: Vec<(f64, usize)> = graph
            .neighbors(p)
            .iter()
            .map(|&q| (angle_about(set, p, q), q))
            .collect();
        entries.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        let k = entries.len();
        if k >= 2 {
            for j in 0..k {
                let (a, q) = entries[j];
                let (b, r) = entries[(j + 1) % k];
                if ccw_sweep(a, b) <= GUARD || (k == 2 && TAU - ccw_sweep(a, b) <= GUARD) {
                    return Err(Error::AngularTie {
                        p,
                        q: q.min(r),
                        r: q.max(r),
                    });
                }
            }
        }
        Ok(Self {
            angles: entries.iter().map(|e| e.0).collect(),
            points: entries.into_iter().map(|e| e.1).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Counterclockwise gap from roster slot `j` to slot `j + 1` (cyclic).
    pub fn gap(&self, j: usize) -> f64 {
        let k = self.len();
        let next = self.angles[(j + 1) % k];
        let g = ccw_sweep(self.angles[j], next);
        if k == 1 {
            TAU
        } else {
            g
        }
    }

    /// Slot `j` such that `angle` lies strictly between slots `j` and
    /// `j + 1`, or the nearest roster point when `angle` is within `guard`
    /// of it.
    pub fn locate(&self, angle: f64, guard: f64) -> Located {
        let k = self.len();
        debug_assert!(k >= 1);
        let idx = self.angles.partition_point(|&a| a <= angle);
        let before = (idx + k - 1) % k;
        let after = idx % k;
        if ccw_sweep(self.angles[before], angle) <= guard {
            return Located::Endpoint(self.points[before]);
        }
        if ccw_sweep(angle, self.angles[after]) <= guard {
            return Located::Endpoint(self.points[after]);
        }
        Located::Interior(before)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Located {
    Interior(usize),
    Endpoint(usize),
}

/// Circular-arc drawing of a unit-distance graph: every circle carrying
/// `k >= 2` points contributes the `k` arcs between angularly consecutive
/// points; circles with `k <= 1` are excluded.
#[derive(Debug, Clone, PartialEq)]
pub struct SzekelyDrawing {
    arcs: Vec<ArcEdge>,
    rosters: Vec<Roster>,
    arc_ranges: Vec<Range<usize>>,
    excluded: Vec<usize>,
}

impl SzekelyDrawing {
    pub fn arcs(&self) -> &[ArcEdge] {
        &self.arcs
    }

    pub fn roster(&self, p: usize) -> &Roster {
        &self.rosters[p]
    }

    /// Number of set points on `C(p)`.
    pub fn k(&self, p: usize) -> usize {
        self.rosters[p].len()
    }

    /// Indices into [`arcs`](Self::arcs) of the arcs on `C(p)`, in roster order.
    pub fn arcs_of(&self, p: usize) -> Range<usize> {
        self.arc_ranges[p].clone()
    }

    /// Centers with `k <= 1`.
    pub fn excluded_circles(&self) -> &[usize] {
        &self.excluded
    }

    pub fn circle_count(&self) -> usize {
        self.rosters.len()
    }

    /// `2 u(P) - |arcs|`: one per circle carrying a single point.
    pub fn arc_deficit(&self, graph: &UnitDistanceGraph) -> usize {
        2 * graph.unit_count() - self.arcs.len()
    }

    /// Arc index of the arc on `C(p)` starting at roster slot `slot`.
    pub fn arc_at(&self, p: usize, slot: usize) -> usize {
        self.arc_ranges[p].start + slot
    }

    /// Distinct unordered endpoint pairs over all arcs.
    pub fn simple_edge_count(&self) -> usize {
        let mut pairs: Vec<(usize, usize)> = self
            .arcs
            .iter()
            .map(|a| {
                let (q, r) = a.endpoints;
                (q.min(r), q.max(r))
            })
            .collect();
        pairs.sort_unstable();
        pairs.dedup();
        pairs.len()
    }
}

pub fn build_drawing<S: PointSet + ?Sized>(
    graph: &UnitDistanceGraph,
    set: &S,
) -> Result<SzekelyDrawing> {
    let n = graph.n();
    let mut arcs = Vec::with_capacity(2 * graph.unit_count());
    let mut rosters = Vec::with_capacity(n);
    let mut arc_ranges = Vec::with_capacity(n);
    let mut excluded = Vec::new();
    for p in 0..n {
        let roster = Roster::build(set, graph, p)?;
        let k = roster.len();
        let start = arcs.len();
        if k >= 2 {
            for j in 0..k {
                arcs.push(ArcEdge {
                    circle: p,
                    endpoints: (roster.points[j], roster.points[(j + 1) % k]),
                    start: roster.angles[j],
                    sweep: roster.gap(j),
                });
            }
        } else {
            excluded.push(p);
        }
        arc_ranges.push(start..arcs.len());
        rosters.push(roster);
    }
    Ok(SzekelyDrawing {
        arcs,
        rosters,
        arc_ranges,
        excluded,
    })
}
