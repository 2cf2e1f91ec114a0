//! Consecutive neighbor pairs, lune populations and the typical-point census.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{param, Error, Result};
use crate::geom::{Lune, PointSet, Separation};
use crate::udg::{circle_arc_crossings, Roster, SzekelyDrawing, UnitDistanceGraph};

/// Angularly consecutive unit-neighbor pairs `(q, r)` on `C(p)`, in roster
/// order. A circle with two points has a single pair.
pub fn consecutive_pairs<S: PointSet + ?Sized>(
    set: &S,
    graph: &UnitDistanceGraph,
    p: usize,
) -> Result<Vec<(usize, usize)>> {
    let roster = Roster::build(set, graph, p)?;
    pairs_of(&roster, p)
}

fn pairs_of(roster: &Roster, p: usize) -> Result<Vec<(usize, usize)>> {
    let k = roster.len();
    match k {
        0 | 1 => Err(Error::EmptyCircle { p, k }),
        2 => Ok(vec![(roster.points[0], roster.points[1])]),
        _ => Ok((0..k)
            .map(|j| (roster.points[j], roster.points[(j + 1) % k]))
            .collect()),
    }
}

/// Number of set points strictly inside `L(q, r)`.
pub fn lune_population<S: PointSet + ?Sized>(set: &S, q: usize, r: usize) -> Result<usize> {
    let lune = Lune::new(set, q, r)?;
    Ok((0..set.len()).filter(|&i| lune.contains(set, i)).count())
}

/// Whether `L(q, r)` emanates from `p`: both centers are unit-neighbors of `p`,
/// so `C(q)` and `C(r)` meet at `p`.
pub fn is_emanating(graph: &UnitDistanceGraph, p: usize, q: usize, r: usize) -> bool {
    q != r && graph.is_edge(p, q) && graph.is_edge(p, r)
}

/// Thresholds of the typical-point census.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TypicalConfig {
    pub c4: f64,
    pub c5: f64,
    pub c5p: f64,
}

impl Default for TypicalConfig {
    fn default() -> Self {
        Self {
            c4: 0.1,
            c5: 0.0,
            c5p: 1.0,
        }
    }
}

impl TypicalConfig {
    /// All constants finite and nonnegative, `c5 <= c5p`.
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("c4", self.c4), ("c5", self.c5), ("c5p", self.c5p)] {
            if !v.is_finite() || v < 0.0 {
                return Err(param(name, "must be finite and >= 0"));
            }
        }
        if self.c5 > self.c5p {
            return Err(param("c5", "must not exceed c5p"));
        }
        Ok(())
    }
}

/// Census entry for one center.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointCensus {
    pub point: usize,
    pub k: usize,
    pub qualifying_pairs: usize,
    /// Population of each consecutive pair's lune in roster order; `None`
    /// for antipodal pairs, whose circles only touch.
    pub lune_sizes: Vec<Option<usize>>,
    pub is_typical: bool,
}

/// One CSV row of the census export.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub point_index: usize,
    pub k: usize,
    pub qualifying_pairs: usize,
    pub is_typical: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TypicalCensus {
    pub n: usize,
    pub config: TypicalConfig,
    /// `[c5 n^(2/3), c5p n^(2/3)]`.
    pub window: (f64, f64),
    /// `c4 n^(1/3)`.
    pub required_pairs: f64,
    pub points: Vec<PointCensus>,
    pub typical_count: usize,
    /// `typical_count / n`.
    pub typical_fraction: f64,
    pub degenerate_pairs: usize,
}

impl TypicalCensus {
    pub fn rows(&self) -> Vec<CensusRow> {
        self.points
            .iter()
            .map(|c| CensusRow {
                point_index: c.point,
                k: c.k,
                qualifying_pairs: c.qualifying_pairs,
                is_typical: c.is_typical,
            })
            .collect()
    }
}

/// For each `p`, counts consecutive pairs on `C(p)` whose lune population lies
/// in the window; `p` is typical when that count reaches `c4 n^(1/3)`.
pub fn typical_census<S: PointSet + ?Sized>(
    set: &S,
    graph: &UnitDistanceGraph,
    config: TypicalConfig,
) -> Result<TypicalCensus> {
    config.validate()?;
    let n = set.len();
    let nf = n as f64;
    let window = (config.c5 * nf.powf(2.0 / 3.0), config.c5p * nf.powf(2.0 / 3.0));
    let required_pairs = config.c4 * nf.cbrt();
    let points: Vec<PointCensus> = (0..n)
        .into_par_iter()
        .map(|p| {
            let roster = Roster::build(set, graph, p)?;
            let k = roster.len();
            let lune_sizes: Vec<Option<usize>> = if k < 2 {
                Vec::new()
            } else {
                pairs_of(&roster, p)?
                    .into_iter()
                    .map(|(q, r)| match set.separation(q, r) {
                        Separation::Crossing => lune_population(set, q, r).map(Some),
                        _ => Ok(None),
                    })
                    .collect::<Result<_>>()?
            };
            let qualifying_pairs = lune_sizes
                .iter()
                .flatten()
                .filter(|&&s| (s as f64) >= window.0 && (s as f64) <= window.1)
                .count();
            Ok(PointCensus {
                point: p,
                k,
                qualifying_pairs,
                is_typical: k >= 2 && qualifying_pairs as f64 >= required_pairs,
                lune_sizes,
            })
        })
        .collect::<Result<_>>()?;
    let typical_count = points.iter().filter(|c| c.is_typical).count();
    let degenerate_pairs = points
        .iter()
        .map(|c| c.lune_sizes.iter().filter(|s| s.is_none()).count())
        .sum();
    Ok(TypicalCensus {
        n,
        config,
        window,
        required_pairs,
        typical_fraction: if n == 0 { 0.0 } else { typical_count as f64 / nf },
        typical_count,
        points,
        degenerate_pairs,
    })
}

/// Outcome of matching, arc by arc, the circles crossing an arc against the
/// population of the lune of its endpoints.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ArcLuneCheck {
    pub arcs_checked: usize,
    pub pairs_checked: usize,
    /// `(x, arc)` pairs skipped: an intersection within the guard band of an
    /// arc endpoint, or `x` on one of the two lune circles.
    pub boundary_exclusions: usize,
    /// `(x, arc)` pairs where `C(x)` meets the arc interior twice.
    pub double_crossings: usize,
    /// `(arc, circles crossing an odd number of times, lune members)`.
    pub mismatches: Vec<(usize, usize, usize)>,
}

impl ArcLuneCheck {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// For every arc between consecutive `q`, `r` on `C(p)` whose lune is
/// defined, `C(x)` crosses the arc an odd number of times exactly when `x`
/// lies in `L(q, r)`. Counted over `x` outside `{p, q, r}`.
pub fn cross_validate_arcs<S: PointSet + ?Sized>(
    set: &S,
    drawing: &SzekelyDrawing,
) -> ArcLuneCheck {
    let per_arc: Vec<ArcLuneCheck> = (0..drawing.arcs().len())
        .into_par_iter()
        .map(|arc| {
            let mut out = ArcLuneCheck::default();
            let a = drawing.arcs()[arc];
            let p = a.circle;
            let (q, r) = a.endpoints;
            let Ok(lune) = Lune::new(set, q, r) else {
                return out;
            };
            out.arcs_checked = 1;
            let (mut odd, mut members) = (0, 0);
            for x in (0..set.len()).filter(|&x| x != p && x != q && x != r) {
                if set.unit_pair(x, q) || set.unit_pair(x, r) {
                    out.boundary_exclusions += 1;
                    continue;
                }
                let Some(c) = circle_arc_crossings(set, drawing, arc, x) else {
                    out.boundary_exclusions += 1;
                    continue;
                };
                out.pairs_checked += 1;
                if c == 2 {
                    out.double_crossings += 1;
                }
                odd += (c % 2) as usize;
                members += lune.contains(set, x) as usize;
            }
            if odd != members {
                out.mismatches.push((arc, odd, members));
            }
            out
        })
        .collect();
    per_arc.into_iter().fold(ArcLuneCheck::default(), |mut acc, c| {
        acc.arcs_checked += c.arcs_checked;
        acc.pairs_checked += c.pairs_checked;
        acc.boundary_exclusions += c.boundary_exclusions;
        acc.double_crossings += c.double_crossings;
        acc.mismatches.extend(c.mismatches);
        acc
    })
}
