use std::f64::consts::TAU;

use serde::Serialize;

use crate::error::{param, Error, Result};
use crate::geom::{ccw_sweep, PointSet};
use crate::udg::{build_udg, Roster, UnitDistanceGraph};

/// One pruning step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Removal {
    pub point: usize,
    /// Center whose circle carried the offending gap.
    pub circle: usize,
    /// Zero-based pass in which the removal happened.
    pub pass: usize,
    /// Unit pairs lost, the surviving degree of `point`.
    pub lost_pairs: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PruneResult {
    pub rho: f64,
    pub survivors: Vec<usize>,
    pub removals: Vec<Removal>,
    /// Passes over the labels, the last one making no removal.
    pub passes: usize,
    pub initial_unit_count: usize,
    pub retained_unit_count: usize,
    /// Smallest consecutive gap on each surviving circle with at least two
    /// surviving points, indexed by point.
    pub min_gap: Vec<Option<f64>>,
    /// Survivors left with no surviving unit-neighbor.
    pub isolated: usize,
}

/// Angular state of every circle, restricted to surviving points.
pub(crate) struct Circles {
    /// Unit-neighbors of each center with their angles, in angular order.
    pub(crate) rosters: Vec<Vec<(f64, usize)>>,
}

impl Circles {
    pub(crate) fn new<S: PointSet + ?Sized>(set: &S, graph: &UnitDistanceGraph) -> Result<Self> {
        let rosters = (0..set.len())
            .map(|p| {
                let r = Roster::build(set, graph, p)?;
                Ok(r.angles.into_iter().zip(r.points).collect())
            })
            .collect::<Result<_>>()?;
        Ok(Self { rosters })
    }

    /// All gap values any pruning could compare against: for every circle and
    /// every ordered pair of its points, the counterclockwise sweep and its
    /// complement.
    pub(crate) fn gap_values(&self) -> Vec<f64> {
        let mut out = Vec::new();
        for roster in &self.rosters {
            for (i, &(a, _)) in roster.iter().enumerate() {
                for (j, &(b, _)) in roster.iter().enumerate() {
                    if i != j {
                        let g = ccw_sweep(a, b);
                        out.push(g);
                        out.push(TAU - g);
                    }
                }
            }
        }
        out
    }
}

/// Consecutive gaps on one circle, as `(gap, from, to)` over surviving
/// points. Two points give both arcs between them.
pub(crate) fn gaps(roster: &[(f64, usize)], alive: &[bool]) -> Vec<(f64, usize, usize)> {
    let live: Vec<(f64, usize)> = roster.iter().copied().filter(|&(_, q)| alive[q]).collect();
    let k = live.len();
    match k {
        0 | 1 => Vec::new(),
        2 => {
            let g = ccw_sweep(live[0].0, live[1].0);
            vec![(g, live[0].1, live[1].1), (TAU - g, live[1].1, live[0].1)]
        }
        _ => (0..k)
            .map(|j| {
                let (a, q) = live[j];
                let (b, r) = live[(j + 1) % k];
                (ccw_sweep(a, b), q, r)
            })
            .collect(),
    }
}

/// Lowest label among the endpoints of consecutive gaps `<= rho`.
fn offender(roster: &[(f64, usize)], alive: &[bool], rho: f64) -> Option<usize> {
    gaps(roster, alive)
        .into_iter()
        .filter(|&(g, _, _)| g <= rho)
        .map(|(_, q, r)| q.min(r))
        .min()
}

/// Prunes with labels in index order: visiting surviving centers by
/// increasing label, while some consecutive gap on the circle is `<= rho`
/// the lowest-labelled point of such a gap is removed. Passes repeat until
/// one makes no removal.
pub fn prune<S: PointSet + ?Sized>(set: &S, rho: f64) -> Result<PruneResult> {
    let graph = build_udg(set);
    let circles = Circles::new(set, &graph)?;
    prune_with(&graph, &circles, rho)
}

pub(crate) fn prune_with(graph: &UnitDistanceGraph, circles: &Circles, rho: f64) -> Result<PruneResult> {
    if !(rho >= 0.0) {
        return Err(param("rho", "must be >= 0"));
    }
    let n = graph.n();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|p| graph.degree(p)).collect();
    let mut removals = Vec::new();
    let mut passes = 0;
    loop {
        let before = removals.len();
        for p in 0..n {
            while alive[p] {
                let Some(x) = offender(&circles.rosters[p], &alive, rho) else {
                    break;
                };
                alive[x] = false;
                for &y in graph.neighbors(x) {
                    if alive[y] {
                        degree[y] -= 1;
                    }
                }
                removals.push(Removal {
                    point: x,
                    circle: p,
                    pass: passes,
                    lost_pairs: degree[x],
                });
            }
        }
        passes += 1;
        if removals.len() == before {
            break;
        }
    }
    let initial = graph.unit_count();
    let lost: usize = removals.iter().map(|r| r.lost_pairs).sum();
    let retained = graph
        .edges()
        .iter()
        .filter(|&&(a, b)| alive[a] && alive[b])
        .count();
    if initial - lost != retained {
        return Err(Error::InvariantViolation(format!(
            "retained {retained} unit pairs, expected {initial} - {lost}"
        )));
    }
    let min_gap = (0..n)
        .map(|p| {
            if !alive[p] {
                return None;
            }
            gaps(&circles.rosters[p], &alive)
                .into_iter()
                .map(|g| g.0)
                .min_by(f64::total_cmp)
        })
        .collect();
    let survivors: Vec<usize> = (0..n).filter(|&p| alive[p]).collect();
    Ok(PruneResult {
        rho,
        isolated: survivors.iter().filter(|&&p| degree[p] == 0).count(),
        survivors,
        removals,
        passes,
        initial_unit_count: initial,
        retained_unit_count: retained,
        min_gap,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::FloatPointSet;

    fn on_circle(angles: &[f64]) -> FloatPointSet<f64> {
        let mut pts = vec![[0.0, 0.0]];
        pts.extend(angles.iter().map(|a| [a.cos(), a.sin()]));
        FloatPointSet::new(pts, 1e-9).unwrap()
    }

    #[test]
    fn zero_rho_keeps_everything() {
        let s = on_circle(&[0.0, 0.1, 3.0]);
        let r = prune(&s, 0.0).unwrap();
        assert_eq!(r.survivors, vec![0, 1, 2, 3]);
        assert!(r.removals.is_empty());
        assert_eq!(r.passes, 1);
    }

    #[test]
    fn close_pair_loses_lower_label() {
        let s = on_circle(&[0.0, 0.1, std::f64::consts::PI]);
        let r = prune(&s, 0.2).unwrap();
        assert_eq!(r.survivors, vec![0, 2, 3]);
        assert_eq!(r.removals.len(), 1);
        assert_eq!(r.removals[0], Removal { point: 1, circle: 0, pass: 0, lost_pairs: 1 });
        assert_eq!(r.retained_unit_count, 2);
        let g = r.min_gap[0].unwrap();
        assert!((g - (std::f64::consts::PI - 0.1)).abs() < 1e-12);
    }

    #[test]
    fn full_turn_leaves_one_point_per_circle() {
        let s = on_circle(&[0.0, 2.0, 4.0]);
        let r = prune(&s, TAU).unwrap();
        assert_eq!(r.survivors, vec![0, 3]);
        assert_eq!(r.isolated, 0);
        assert!(prune(&s, -1.0).is_err());
        assert!(prune(&s, f64::NAN).is_err());
    }
}
