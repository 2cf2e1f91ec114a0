//! Brute-force recounts used by the integration tests. Each works from raw
//! coordinates and avoids the library routine it is compared against.
#![allow(dead_code)]

use std::f64::consts::TAU;

use epl_core::geom::{AnyPointSet, ExactPointSet, FloatPointSet, PointSet};
use epl_core::incidence::{IncidenceStructure, RationalLine, RationalPoint};
use epl_core::scalar::ExactScalar;
use epl_core::udg::{Roster, SzekelyDrawing, UnitDistanceGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const EDGE_GUARD: f64 = 1e-9;
pub const VERTEX_SLACK: f64 = 4.0;

/// Raw coordinates of either backend, with its own distance predicates.
pub enum Raw {
    Exact { scale: i128, pts: Vec<[i128; 2]> },
    Float { tol: f64, pts: Vec<[f64; 2]> },
}

impl Raw {
    pub fn of(set: &AnyPointSet) -> Raw {
        match set {
            AnyPointSet::Exact(s) => Self::exact(s),
            AnyPointSet::Float(s) => Self::float(s),
        }
    }

    pub fn exact(s: &ExactPointSet) -> Raw {
        Raw::Exact {
            scale: s.scale() as i128,
            pts: s.points().iter().map(|p| [p[0] as i128, p[1] as i128]).collect(),
        }
    }

    pub fn float(s: &FloatPointSet<f64>) -> Raw {
        Raw::Float {
            tol: s.tolerance(),
            pts: s.points().to_vec(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Raw::Exact { pts, .. } => pts.len(),
            Raw::Float { pts, .. } => pts.len(),
        }
    }

    /// Unit-distance slack in coordinate units; exact sets still round
    /// their embedded coordinates.
    pub fn tolerance(&self) -> f64 {
        match self {
            Raw::Exact { .. } => 1e-12,
            Raw::Float { tol, .. } => *tol,
        }
    }

    pub fn xy(&self, i: usize) -> [f64; 2] {
        match self {
            Raw::Exact { scale, pts } => {
                let r = (*scale as f64).sqrt();
                [pts[i][0] as f64 / r, pts[i][1] as f64 / r]
            }
            Raw::Float { pts, .. } => pts[i],
        }
    }

    /// Compares `|i - j|` with `r` times the unit: -1, 0 or 1.
    fn cmp_dist(&self, i: usize, j: usize, r: i128) -> i32 {
        match self {
            Raw::Exact { scale, pts } => {
                let (dx, dy) = (pts[i][0] - pts[j][0], pts[i][1] - pts[j][1]);
                let (d2, t) = (dx * dx + dy * dy, r * r * scale);
                (d2 > t) as i32 - (d2 < t) as i32
            }
            Raw::Float { tol, pts } => {
                let d = ((pts[i][0] - pts[j][0]).powi(2) + (pts[i][1] - pts[j][1]).powi(2)).sqrt();
                let r = r as f64;
                if (d - r).abs() <= *tol {
                    0
                } else if d < r {
                    -1
                } else {
                    1
                }
            }
        }
    }

    pub fn unit(&self, i: usize, j: usize) -> bool {
        i != j && self.cmp_dist(i, j, 1) == 0
    }

    pub fn inside(&self, i: usize, c: usize) -> bool {
        self.cmp_dist(i, c, 1) < 0
    }

    /// Centers closer than 2 and distinct, so the unit circles cross.
    pub fn crossing(&self, i: usize, j: usize) -> bool {
        i != j && self.cmp_dist(i, j, 2) < 0 && self.cmp_dist(i, j, 0) > 0
    }

    pub fn angle(&self, c: usize, x: usize) -> f64 {
        let (a, b) = (self.xy(c), self.xy(x));
        (b[1] - a[1]).atan2(b[0] - a[0]).rem_euclid(TAU)
    }
}

/// O(n^2) unit pairs.
pub fn udg_pairs(raw: &Raw) -> Vec<(usize, usize)> {
    let n = raw.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if raw.unit(i, j) {
                out.push((i, j));
            }
        }
    }
    out
}

fn ccw(from: f64, to: f64) -> f64 {
    (to - from).rem_euclid(TAU)
}

fn unit_circle_meets(p: [f64; 2], q: [f64; 2]) -> Vec<[f64; 2]> {
    let (dx, dy) = (q[0] - p[0], q[1] - p[1]);
    let d = dx.hypot(dy);
    if d == 0.0 || d >= 2.0 - EDGE_GUARD {
        return Vec::new();
    }
    let h = (1.0 - d * d / 4.0).sqrt();
    let m = [(p[0] + q[0]) / 2.0, (p[1] + q[1]) / 2.0];
    let (ux, uy) = (-dy / d, dx / d);
    vec![[m[0] + h * ux, m[1] + h * uy], [m[0] - h * ux, m[1] - h * uy]]
}

/// Crossings by testing every pair of arcs on distinct circles:
/// `(total, per-arc counts)`.
pub fn arc_crossings(raw: &Raw, drawing: &SzekelyDrawing) -> (u64, Vec<u32>) {
    let arcs = drawing.arcs();
    let mut per_arc = vec![0u32; arcs.len()];
    let mut total = 0;
    let interior = |arc: usize, x: [f64; 2]| {
        let a = arcs[arc];
        let c = raw.xy(a.circle);
        let t = ccw(a.start, (x[1] - c[1]).atan2(x[0] - c[0]).rem_euclid(TAU));
        t > EDGE_GUARD && t < a.sweep - EDGE_GUARD
    };
    // A set point on both circles. A distance slack `tol` moves the point
    // along the circles by up to about `tol / sin(meeting angle)`, and for
    // centers `d` apart the sine is `d sqrt(1 - d^2 / 4)`.
    let is_vertex = |x: [f64; 2], p: usize, q: usize| {
        let (a, b) = (raw.xy(p), raw.xy(q));
        let d = (a[0] - b[0]).hypot(a[1] - b[1]);
        let radius = VERTEX_SLACK * raw.tolerance() / (d * (1.0 - d * d / 4.0).sqrt()) + 1e-12;
        (0..raw.len()).any(|v| {
            let pv = raw.xy(v);
            raw.unit(v, p) && raw.unit(v, q) && (pv[0] - x[0]).hypot(pv[1] - x[1]) < radius
        })
    };
    for i in 0..arcs.len() {
        for j in i + 1..arcs.len() {
            let (p, q) = (arcs[i].circle, arcs[j].circle);
            if p == q {
                continue;
            }
            for x in unit_circle_meets(raw.xy(p), raw.xy(q)) {
                if is_vertex(x, p, q) {
                    continue;
                }
                if interior(i, x) && interior(j, x) {
                    total += 1;
                    per_arc[i] += 1;
                    per_arc[j] += 1;
                }
            }
        }
    }
    (total, per_arc)
}

/// One point of the census recount.
#[derive(Debug, PartialEq)]
pub struct CensusRecount {
    pub k: usize,
    pub lune_sizes: Vec<Option<usize>>,
    pub qualifying: usize,
    pub typical: bool,
}

/// Neighbors sorted by angle, consecutive pairs, and `|L(q, r)|` counted as
/// points inside exactly one of the two disks.
pub fn census_recount(raw: &Raw, c4: f64, c5: f64, c5p: f64) -> Vec<CensusRecount> {
    let n = raw.len();
    let nf = n as f64;
    let (lo, hi) = (c5 * nf.powf(2.0 / 3.0), c5p * nf.powf(2.0 / 3.0));
    (0..n)
        .map(|p| {
            let mut nb: Vec<usize> = (0..n).filter(|&q| raw.unit(p, q)).collect();
            nb.sort_by(|&a, &b| raw.angle(p, a).total_cmp(&raw.angle(p, b)));
            let k = nb.len();
            let pairs: Vec<(usize, usize)> = match k {
                0 | 1 => vec![],
                2 => vec![(nb[0], nb[1])],
                _ => (0..k).map(|j| (nb[j], nb[(j + 1) % k])).collect(),
            };
            let lune_sizes: Vec<Option<usize>> = pairs
                .iter()
                .map(|&(q, r)| {
                    raw.crossing(q, r).then(|| {
                        (0..n).filter(|&x| raw.inside(x, q) != raw.inside(x, r)).count()
                    })
                })
                .collect();
            let qualifying = lune_sizes
                .iter()
                .flatten()
                .filter(|&&s| s as f64 >= lo && s as f64 <= hi)
                .count();
            CensusRecount {
                k,
                typical: k >= 2 && qualifying as f64 >= c4 * nf.cbrt(),
                lune_sizes,
                qualifying,
            }
        })
        .collect()
}

/// Thinnest closed strip over every bottom `y0` drawn from the pairs: the
/// `need`-th smallest top among pairs starting at or above `y0` fixes `y1`.
/// Returns `(delta, y0)`, lowest `y0` on ties.
pub fn strip_enumeration(ys: &[f64], pairs: &[(usize, usize)], need: usize) -> (f64, f64) {
    let lows: Vec<f64> = pairs.iter().map(|&(a, b)| ys[a].min(ys[b])).collect();
    let highs: Vec<f64> = pairs.iter().map(|&(a, b)| ys[a].max(ys[b])).collect();
    let mut best: Option<(f64, f64)> = None;
    for &y0 in &lows {
        let mut tops: Vec<f64> = (0..pairs.len()).filter(|&i| lows[i] >= y0).map(|i| highs[i]).collect();
        if tops.len() < need {
            continue;
        }
        tops.sort_by(f64::total_cmp);
        let d = tops[need - 1] - y0;
        best = match best {
            Some((bd, by)) if bd < d || (bd == d && by <= y0) => Some((bd, by)),
            _ => Some((d, y0)),
        };
    }
    best.expect("some strip holds every pair")
}

/// Straightforward pruning: labels ascending, gaps recomputed from scratch
/// after each removal, passes until nothing changes. Returns the removal
/// log `(point, circle, pass)` and the retained unit count.
pub fn prune_replay(
    set: &dyn PointSet,
    graph: &UnitDistanceGraph,
    rho: f64,
) -> (Vec<(usize, usize, usize)>, usize) {
    let n = set.len();
    let rosters: Vec<Roster> = (0..n).map(|p| Roster::build(set, graph, p).unwrap()).collect();
    let mut alive = vec![true; n];
    let mut log = Vec::new();
    let mut pass = 0;
    loop {
        let mut removed = false;
        for p in 0..n {
            if !alive[p] {
                continue;
            }
            loop {
                let live: Vec<(f64, usize)> = rosters[p]
                    .angles
                    .iter()
                    .zip(&rosters[p].points)
                    .filter(|(_, &q)| alive[q])
                    .map(|(&a, &q)| (a, q))
                    .collect();
                let k = live.len();
                let mut offenders = Vec::new();
                if k == 2 {
                    let g = ccw(live[0].0, live[1].0);
                    if g <= rho || TAU - g <= rho {
                        offenders.extend([live[0].1, live[1].1]);
                    }
                } else if k > 2 {
                    for j in 0..k {
                        if ccw(live[j].0, live[(j + 1) % k].0) <= rho {
                            offenders.extend([live[j].1, live[(j + 1) % k].1]);
                        }
                    }
                }
                let Some(&victim) = offenders.iter().min() else {
                    break;
                };
                alive[victim] = false;
                log.push((victim, p, pass));
                removed = true;
            }
        }
        pass += 1;
        if !removed {
            break;
        }
    }
    let retained = graph
        .edges()
        .iter()
        .filter(|&&(a, b)| alive[a] && alive[b])
        .count();
    (log, retained)
}

/// Incidences by testing `a x + b y == c` for every pair.
pub fn incidence_count<Q: ExactScalar>(points: &[RationalPoint<Q>], lines: &[RationalLine<Q>]) -> usize {
    let mut count = 0;
    for p in points {
        for l in lines {
            let (a, b, c) = l.coefficients();
            if a.clone() * p.x.clone() + b.clone() * p.y.clone() == *c {
                count += 1;
            }
        }
    }
    count
}

fn orient<Q: ExactScalar>(a: &RationalPoint<Q>, b: &RationalPoint<Q>, c: &RationalPoint<Q>) -> Q {
    (b.x.clone() - a.x.clone()) * (c.y.clone() - a.y.clone())
        - (b.y.clone() - a.y.clone()) * (c.x.clone() - a.x.clone())
}

/// Segments between consecutive points of each line (ordered by `(x, y)`),
/// crossing pairs found by strict orientation tests over all segment pairs.
pub fn segment_crossings<Q: ExactScalar>(s: &IncidenceStructure<Q>) -> usize {
    let mut segs = Vec::new();
    for (l, pts) in s.points_of.iter().enumerate() {
        let mut pts: Vec<&RationalPoint<Q>> = pts.iter().map(|&p| &s.points[p]).collect();
        pts.sort();
        for w in pts.windows(2) {
            segs.push((l, w[0], w[1]));
        }
    }
    let mut count = 0;
    for i in 0..segs.len() {
        for j in i + 1..segs.len() {
            let ((li, a, b), (lj, c, d)) = (segs[i], segs[j]);
            if li == lj {
                continue;
            }
            let (o1, o2) = (orient(a, b, c), orient(a, b, d));
            let (o3, o4) = (orient(c, d, a), orient(c, d, b));
            let strict = |x: &Q, y: &Q| (x.is_positive() && y.is_negative()) || (x.is_negative() && y.is_positive());
            if strict(&o1, &o2) && strict(&o3, &o4) {
                count += 1;
            }
        }
    }
    count
}

/// Per center on at least `max(t, 2)` lines: the between counts over all
/// points and over heavy points, and the degenerate tests, with the lines'
/// dual points ordered along `l(p)` by one coordinate.
pub fn propeller_recount<Q: ExactScalar>(
    s: &IncidenceStructure<Q>,
    t: usize,
) -> Vec<(usize, Vec<usize>, Vec<usize>, usize)> {
    let n = s.points.len();
    let heavy: Vec<bool> = (0..n).map(|p| s.lines_of[p].len() >= t.max(2)).collect();
    let mut out = Vec::new();
    for p in (0..n).filter(|&p| heavy[p]) {
        let pp = &s.points[p];
        let mut duals: Vec<RationalPoint<Q>> = s.lines_of[p]
            .iter()
            .map(|&l| {
                let (a, b, c) = s.lines[l].coefficients();
                RationalPoint::new(a.clone() / c.clone(), b.clone() / c.clone())
            })
            .collect();
        // l(p) is vertical exactly when p.y = 0
        if pp.y.is_zero() {
            duals.sort_by(|u, v| u.y.cmp(&v.y));
        } else {
            duals.sort_by(|u, v| u.x.cmp(&v.x));
        }
        let (mut all, mut hv, mut degenerate) = (Vec::new(), Vec::new(), 0);
        for w in duals.windows(2) {
            let (mut a, mut h) = (0, 0);
            for (i, p1) in s.points.iter().enumerate() {
                if p1.is_origin() {
                    degenerate += 1;
                    continue;
                }
                let one = Q::one();
                let s1 = p1.x.clone() * w[0].x.clone() + p1.y.clone() * w[0].y.clone() - one.clone();
                let s2 = p1.x.clone() * w[1].x.clone() + p1.y.clone() * w[1].y.clone() - one;
                if s1.is_zero() || s2.is_zero() {
                    degenerate += 1;
                } else if s1.is_positive() != s2.is_positive() {
                    a += 1;
                    h += heavy[i] as usize;
                }
            }
            all.push(a);
            hv.push(h);
        }
        out.push((p, all, hv, degenerate));
    }
    out
}

/// Random points plus unit-distance children at random angles: unit pairs
/// without coincidences.
pub fn random_tree(n: usize, seed: u64) -> FloatPointSet<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pts: Vec<[f64; 2]> = (0..4.min(n)).map(|_| [rng.gen_range(0.0..1.5), rng.gen_range(0.0..1.5)]).collect();
    while pts.len() < n {
        let parent = pts[rng.gen_range(0..pts.len())];
        let phi: f64 = rng.gen_range(0.0..TAU);
        let child = [parent[0] + phi.cos(), parent[1] + phi.sin()];
        if child.iter().all(|c| (-1.0..2.5).contains(c)) {
            pts.push(child);
        }
    }
    FloatPointSet::new(pts, 1e-9).unwrap()
}
