use std::f64::consts::TAU;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{meeting_angle, Lune, PointSet, Separation};
use crate::prune::algo::{gaps, Circles, PruneResult};
use crate::udg::build_udg;

/// Tolerance between meeting angles and arc gaps.
pub const ANGLE_TOLERANCE: f64 = 1e-9;

/// Closest pair of surviving centers whose circles cross.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClosestPair {
    pub p: usize,
    pub q: usize,
    pub distance: f64,
    /// Survivors strictly inside `L(p, q)`.
    pub lune_population: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SummaryChecks {
    pub epsilon: f64,
    pub min_gap: Option<f64>,
    pub angle_pairs_checked: usize,
    pub max_angle_deviation: f64,
    /// `delta / (epsilon n^(1/3))`, absent when `epsilon = 0`.
    pub delta_ratio: Option<f64>,
    pub isolated: usize,
    pub closest_pair: Option<ClosestPair>,
}

/// Checks the pruned set: every surviving consecutive gap exceeds `epsilon`,
/// and the circles through each consecutive pair meet at the center in an
/// angle equal to the shorter of the two arcs. Also measures
/// `delta / (epsilon n^(1/3))`.
pub fn summary_checks<S: PointSet + ?Sized>(
    set: &S,
    result: &PruneResult,
    delta: f64,
    epsilon: f64,
    n: usize,
) -> Result<SummaryChecks> {
    let graph = build_udg(set);
    let circles = Circles::new(set, &graph)?;
    let mut alive = vec![false; set.len()];
    for &p in &result.survivors {
        alive[p] = true;
    }
    let mut min_gap: Option<f64> = None;
    let mut checked = 0;
    let mut worst: f64 = 0.0;
    for &p in &result.survivors {
        for (g, q, r) in gaps(&circles.rosters[p], &alive) {
            if g <= epsilon {
                return Err(Error::InvariantViolation(format!(
                    "gap {g} between {q} and {r} on circle {p} does not exceed {epsilon}"
                )));
            }
            min_gap = Some(min_gap.map_or(g, |m| m.min(g)));
            let dev = (meeting_angle(set, p, q, r)? - g.min(TAU - g)).abs();
            if dev > ANGLE_TOLERANCE {
                return Err(Error::InvariantViolation(format!(
                    "meeting angle at {p} of circles {q}, {r} is off its arc by {dev}"
                )));
            }
            worst = worst.max(dev);
            checked += 1;
        }
    }
    let delta_ratio = (epsilon > 0.0).then(|| delta / (epsilon * (n as f64).cbrt()));
    Ok(SummaryChecks {
        epsilon,
        min_gap,
        angle_pairs_checked: checked,
        max_angle_deviation: worst,
        delta_ratio,
        isolated: result.isolated,
        closest_pair: closest_pair(set, &result.survivors),
    })
}

fn closest_pair<S: PointSet + ?Sized>(set: &S, survivors: &[usize]) -> Option<ClosestPair> {
    let dist = |a: usize, b: usize| {
        let (x, y) = (set.position(a), set.position(b));
        (x[0] - y[0]).hypot(x[1] - y[1])
    };
    let mut best: Option<(f64, usize, usize)> = None;
    for (i, &p) in survivors.iter().enumerate() {
        for &q in &survivors[i + 1..] {
            if set.separation(p, q) == Separation::Crossing {
                let d = dist(p, q);
                if best.is_none_or(|b| d < b.0) {
                    best = Some((d, p, q));
                }
            }
        }
    }
    let (distance, p, q) = best?;
    let lune = Lune::new(set, p, q).ok()?;
    Some(ClosestPair {
        p,
        q,
        distance,
        lune_population: survivors.iter().filter(|&&x| lune.contains(set, x)).count(),
    })
}
