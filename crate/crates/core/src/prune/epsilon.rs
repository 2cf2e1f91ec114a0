use rayon::prelude::*;
use serde::Serialize;

use crate::error::{param, Error, Result};
use crate::geom::PointSet;
use crate::prune::algo::{prune_with, Circles, PruneResult};
use crate::udg::{build_udg, UnitDistanceGraph};

/// Exhaustive scan of the pruning radius.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EpsilonSearch {
    pub epsilon: f64,
    /// Unit pairs the pruned set must keep, `ceil(c8 x u)`.
    pub threshold: usize,
    /// Ascending radii at which the retained count can change, starting at 0.
    pub candidates: Vec<f64>,
    /// Retained unit count at each candidate.
    pub retained: Vec<usize>,
    /// Candidate positions `i` with `retained[i + 1] > retained[i]`.
    pub non_monotone: Vec<usize>,
    pub result: PruneResult,
}

impl EpsilonSearch {
    /// Retained count for an arbitrary radius, read off the scan.
    pub fn retained_at(&self, rho: f64) -> usize {
        let i = self.candidates.partition_point(|&c| c <= rho);
        self.retained[i.saturating_sub(1)]
    }
}

/// Largest radius `rho` among the candidates whose pruned set keeps at least
/// `ceil(c8 x u)` unit pairs.
///
/// The candidates are every gap value pruning can ever compare against, so
/// the retained count is constant between consecutive candidates.
pub fn find_epsilon<S: PointSet + ?Sized>(set: &S, c8: f64) -> Result<EpsilonSearch> {
    if !(c8 >= 0.0) || !c8.is_finite() {
        return Err(param("c8", "must be in [0, 1]"));
    }
    if c8 > 1.0 {
        return Err(Error::Infeasible(format!("c8 = {c8} exceeds 1")));
    }
    let graph = build_udg(set);
    let circles = Circles::new(set, &graph)?;
    let threshold = (c8 * graph.unit_count() as f64).ceil() as usize;
    let mut candidates = circles.gap_values();
    candidates.push(0.0);
    candidates.sort_by(f64::total_cmp);
    candidates.dedup();
    let runs: Vec<PruneResult> = candidates
        .par_iter()
        .map(|&rho| prune_with(&graph, &circles, rho))
        .collect::<Result<_>>()?;
    let retained: Vec<usize> = runs.iter().map(|r| r.retained_unit_count).collect();
    let non_monotone = retained
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[1] > w[0])
        .map(|(i, _)| i)
        .collect();
    let best = (0..candidates.len())
        .rev()
        .find(|&i| retained[i] >= threshold)
        .ok_or_else(|| Error::Infeasible(format!("no radius keeps {threshold} unit pairs")))?;
    Ok(EpsilonSearch {
        epsilon: candidates[best],
        threshold,
        result: runs.into_iter().nth(best).unwrap(),
        candidates,
        retained,
        non_monotone,
    })
}

/// Comparison of the scan against direct pruning on a uniform grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridCheck {
    pub step: f64,
    pub radii: usize,
    /// `(rho, direct, from scan)` where they differ.
    pub mismatches: Vec<(f64, usize, usize)>,
    /// Largest grid radius meeting the threshold.
    pub grid_epsilon: f64,
}

/// Prunes directly at `factor` times as many evenly spaced radii as the
/// scan has candidates, over `[0, max candidate]`, and compares.
pub fn grid_check<S: PointSet + ?Sized>(set: &S, search: &EpsilonSearch, factor: usize) -> Result<GridCheck> {
    let graph: UnitDistanceGraph = build_udg(set);
    let circles = Circles::new(set, &graph)?;
    let top = *search.candidates.last().unwrap();
    let radii = (factor * search.candidates.len()).max(2);
    let step = top / (radii - 1) as f64;
    let rows: Vec<(f64, usize)> = (0..radii)
        .into_par_iter()
        .map(|i| {
            let rho = if i + 1 == radii { top } else { step * i as f64 };
            prune_with(&graph, &circles, rho).map(|r| (rho, r.retained_unit_count))
        })
        .collect::<Result<_>>()?;
    let mismatches = rows
        .iter()
        .filter(|&&(rho, direct)| direct != search.retained_at(rho))
        .map(|&(rho, direct)| (rho, direct, search.retained_at(rho)))
        .collect();
    let grid_epsilon = rows
        .iter()
        .rev()
        .find(|r| r.1 >= search.threshold)
        .map_or(0.0, |r| r.0);
    Ok(GridCheck {
        step,
        radii,
        mismatches,
        grid_epsilon,
    })
}
