//! Deterministic input generators.

use std::collections::{BTreeMap, HashSet};
use std::f64::consts::{FRAC_PI_6, TAU};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{param, Result};
use crate::geom::{circle_intersections, AnyPointSet, ExactPointSet, FloatPointSet, DEFAULT_TOLERANCE};
use crate::incidence::{RationalLine, RationalPoint};
use crate::scalar::ExactScalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorKind {
    GridLattice,
    StGrid,
    RandomDisk,
    Cocircular,
    MoserSpindle,
    TwoCluster,
}

impl GeneratorKind {
    pub fn name(self) -> &'static str {
        match self {
            GeneratorKind::GridLattice => "grid_lattice",
            GeneratorKind::StGrid => "st_grid",
            GeneratorKind::RandomDisk => "random_disk",
            GeneratorKind::Cocircular => "cocircular",
            GeneratorKind::MoserSpindle => "moser_spindle",
            GeneratorKind::TwoCluster => "two_cluster",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub kind: GeneratorKind,
    /// Side parameter for `grid_lattice` and `st_grid`, point count otherwise.
    pub size: usize,
    pub seed: u64,
}

/// Output of [`generate`].
#[derive(Debug, Clone, PartialEq)]
pub enum Generated<Q> {
    Points(AnyPointSet),
    Incidence(Vec<RationalPoint<Q>>, Vec<RationalLine<Q>>),
}

pub fn generate<Q: ExactScalar>(spec: &GeneratorSpec) -> Result<Generated<Q>> {
    Ok(match spec.kind {
        GeneratorKind::GridLattice => Generated::Points(gen_grid_lattice(spec.size)?.into()),
        GeneratorKind::StGrid => {
            let (p, l) = gen_st_grid(spec.size)?;
            Generated::Incidence(p, l)
        }
        GeneratorKind::RandomDisk => {
            Generated::Points(gen_random_disk(spec.size, spec.seed)?.into())
        }
        GeneratorKind::Cocircular => Generated::Points(gen_cocircular(spec.size)?.into()),
        GeneratorKind::MoserSpindle => Generated::Points(gen_moser_spindle().into()),
        GeneratorKind::TwoCluster => {
            Generated::Points(gen_two_cluster(spec.size, spec.seed)?.into())
        }
    })
}

/// Squared distance with the most unordered pair representations among
/// `points`; ties go to the smaller value. `None` for fewer than two points.
pub fn most_represented_distance(points: &[[i64; 2]]) -> Option<(i64, usize)> {
    let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            let (dx, dy) = (a[0] - b[0], a[1] - b[1]);
            *counts.entry(dx * dx + dy * dy).or_default() += 1;
        }
    }
    best_count(counts)
}

fn best_count(counts: BTreeMap<i64, usize>) -> Option<(i64, usize)> {
    // BTreeMap iterates ascending, so the first maximum is the smallest tie
    counts
        .into_iter()
        .fold(None, |best: Option<(i64, usize)>, (d, c)| match best {
            Some((_, bc)) if bc >= c => best,
            _ => Some((d, c)),
        })
}

/// Same as [`most_represented_distance`] for the `k x k` grid, counting by
/// difference vector in `O(k^2)`.
fn grid_best_distance(k: i64) -> (i64, usize) {
    let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
    for dx in 0..k {
        for dy in -(k - 1)..k {
            if dx == 0 && dy <= 0 {
                continue;
            }
            *counts.entry(dx * dx + dy * dy).or_default() += ((k - dx) * (k - dy.abs())) as usize;
        }
    }
    best_count(counts).expect("k >= 2")
}

/// The `k x k` integer grid at the scale with the most unit pairs.
pub fn gen_grid_lattice(k: usize) -> Result<ExactPointSet> {
    if k < 2 {
        return Err(param("k", "grid_lattice needs k >= 2"));
    }
    let ki = k as i64;
    let (scale, _) = grid_best_distance(ki);
    let points = (0..ki).flat_map(|i| (0..ki).map(move |j| [i, j])).collect();
    ExactPointSet::new(scale, points)
}

/// `P = [1, k] x [1, 2k^2]`, `L = {y = m x + b : 1 <= m <= k, 1 <= b <= k^2}`.
pub fn gen_st_grid<Q: ExactScalar>(k: usize) -> Result<(Vec<RationalPoint<Q>>, Vec<RationalLine<Q>>)> {
    if k < 1 {
        return Err(param("k", "st_grid needs k >= 1"));
    }
    let ki = k as i64;
    let int = |v: i64| Q::from_parts(v, 1).expect("integer fits");
    let points = (1..=ki)
        .flat_map(|i| (1..=2 * ki * ki).map(move |j| (i, j)))
        .map(|(i, j)| RationalPoint::from_ints(i, j))
        .collect();
    let lines = (1..=ki)
        .flat_map(|m| (1..=ki * ki).map(move |b| (m, b)))
        .map(|(m, b)| RationalLine::new(int(-m), int(1), int(b)))
        .collect::<Result<_>>()?;
    Ok((points, lines))
}

/// `n` distinct lattice points drawn uniformly from a disk holding about
/// `4n` lattice points, at the scale with the most unit pairs.
pub fn gen_random_disk(n: usize, seed: u64) -> Result<ExactPointSet> {
    if n < 1 {
        return Err(param("n", "random_disk needs n >= 1"));
    }
    let radius = (4.0 * n as f64 / std::f64::consts::PI).sqrt().ceil() as i64 + 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = HashSet::with_capacity(n);
    let mut points = Vec::with_capacity(n);
    while points.len() < n {
        let p = [
            rng.gen_range(-radius..=radius),
            rng.gen_range(-radius..=radius),
        ];
        if p[0] * p[0] + p[1] * p[1] <= radius * radius && seen.insert(p) {
            points.push(p);
        }
    }
    let scale = most_represented_distance(&points).map_or(1, |(d, _)| d);
    ExactPointSet::new(scale, points)
}

/// `n` equally spaced points on the unit circle about the origin.
pub fn gen_cocircular(n: usize) -> Result<FloatPointSet<f64>> {
    if n < 1 {
        return Err(param("n", "cocircular needs n >= 1"));
    }
    let points = (0..n)
        .map(|i| {
            let a = TAU * i as f64 / n as f64;
            [a.cos(), a.sin()]
        })
        .collect();
    FloatPointSet::new(points, DEFAULT_TOLERANCE)
}

/// The seven-point Moser spindle: two unit rhombi sharing a vertex, rotated
/// until their far tips are at unit distance.
pub fn gen_moser_spindle() -> FloatPointSet<f64> {
    let tip = 3f64.sqrt();
    let turn = 2.0 * (1.0 / (2.0 * tip)).asin();
    let polar = |r: f64, a: f64| [r * a.cos(), r * a.sin()];
    let mut points = vec![[0.0, 0.0]];
    for dir in [0.0, turn] {
        points.push(polar(1.0, dir - FRAC_PI_6));
        points.push(polar(1.0, dir + FRAC_PI_6));
        points.push(polar(tip, dir));
    }
    FloatPointSet::new(points, DEFAULT_TOLERANCE).expect("spindle points are distinct")
}

/// Side of the generated square clouds.
pub const CLUSTER_SIDE: f64 = 0.01;

/// Two square clouds of side [`CLUSTER_SIDE`] whose centers are a unit
/// distance apart in a seeded direction. The first `ceil(n/2)` points are
/// uniform in cloud A; each point of cloud B is an intersection of the unit
/// circles about two A points, so it carries at least two unit pairs.
pub fn gen_two_cluster(n: usize, seed: u64) -> Result<FloatPointSet<f64>> {
    if n < 1 {
        return Err(param("n", "two_cluster needs n >= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let half = CLUSTER_SIDE / 2.0;
    let center_a = [0.5, 0.5];
    let dir: f64 = rng.gen_range(0.0..TAU);
    let center_b = [center_a[0] + dir.cos(), center_a[1] + dir.sin()];
    let in_b = |p: [f64; 2]| (p[0] - center_b[0]).abs() <= half && (p[1] - center_b[1]).abs() <= half;
    let far_enough = |pts: &[[f64; 2]], p: [f64; 2]| {
        pts.iter()
            .all(|q| (q[0] - p[0]).hypot(q[1] - p[1]) > 1e3 * DEFAULT_TOLERANCE)
    };

    // A hugs a short segment perpendicular to dir, so most pairs of A circles
    // meet inside B.
    let perp = [-dir.sin(), dir.cos()];
    let n_a = n.div_ceil(2);
    let mut points: Vec<[f64; 2]> = Vec::with_capacity(n);
    while points.len() < n_a {
        let s = rng.gen_range(-half / 2.0..half / 2.0);
        let w = rng.gen_range(-1e-6..1e-6);
        let p = [
            center_a[0] + s * perp[0] + w * dir.cos(),
            center_a[1] + s * perp[1] + w * dir.sin(),
        ];
        if far_enough(&points, p) {
            points.push(p);
        }
    }
    let mut pairs: Vec<(usize, usize)> = (0..n_a)
        .flat_map(|i| (i + 1..n_a).map(move |j| (i, j)))
        .collect();
    pairs.shuffle(&mut rng);
    let mut pairs = pairs.into_iter();
    while points.len() < n {
        let candidate = match pairs.next() {
            Some((i, j)) => circle_intersections(points[i], points[j])?
                .points()
                .into_iter()
                .find(|&p| in_b(p)),
            None => {
                let a = points[rng.gen_range(0..n_a)];
                let t = [
                    center_b[0] + rng.gen_range(-half / 2.0..half / 2.0),
                    center_b[1] + rng.gen_range(-half / 2.0..half / 2.0),
                ];
                let d = (t[0] - a[0]).hypot(t[1] - a[1]);
                Some([a[0] + (t[0] - a[0]) / d, a[1] + (t[1] - a[1]) / d])
            }
        };
        if let Some(p) = candidate {
            if far_enough(&points, p) {
                points.push(p);
            }
        }
    }
    FloatPointSet::new(points, DEFAULT_TOLERANCE)
}
