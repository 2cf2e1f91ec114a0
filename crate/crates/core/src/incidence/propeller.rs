use std::cmp::Ordering;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::incidence::duality::{dualize_line, dualize_point};
use crate::incidence::structure::IncidenceStructure;
use crate::incidence::types::{RationalLine, RationalPoint};
use crate::scalar::ExactScalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Betweenness {
    /// `l(p1)` meets `l(p)` strictly between `q` and `q'`.
    pub crosses_between: bool,
    /// `p1 . q - 1` and `p1 . q' - 1` have opposite signs.
    pub lies_between: bool,
}

/// Both readings of "`p1` lies between the lines `l(q)` and `l(q')`", for
/// distinct `q`, `q'` on `l(p)`.
pub fn betweenness_check<Q: ExactScalar>(
    p: &RationalPoint<Q>,
    q: &RationalPoint<Q>,
    q2: &RationalPoint<Q>,
    p1: &RationalPoint<Q>,
) -> Result<Betweenness> {
    let one = Q::one();
    if p.dot(q) != one || p.dot(q2) != one || q == q2 {
        return Err(Error::DegenerateBetweenness(
            "q and q' must be distinct points of l(p)".into(),
        ));
    }
    if p1.is_origin() {
        return Err(Error::DegenerateBetweenness("p1 is the origin".into()));
    }
    let (s, s2) = (p1.dot(q) - one.clone(), p1.dot(q2) - one);
    if s.is_zero() || s2.is_zero() {
        return Err(Error::DegenerateBetweenness(
            "p1 lies on l(q) or l(q')".into(),
        ));
    }
    let lies_between = s.is_positive() != s2.is_positive();

    let lp = dualize_point(p)?;
    let l1 = dualize_point(p1)?;
    let crosses_between = match lp.intersection(&l1) {
        None => false,
        Some(x) => {
            let (t, a, b) = (lp.param(&x), lp.param(q), lp.param(q2));
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            lo < t && t < hi
        }
    };
    Ok(Betweenness {
        crosses_between,
        lies_between,
    })
}

/// Window and threshold of the propeller census.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropellerConfig {
    /// Minimum number of lines through a center.
    pub t: usize,
    /// Inclusive window on the number of points between consecutive lines.
    pub lo: usize,
    pub hi: Option<usize>,
}

impl Default for PropellerConfig {
    fn default() -> Self {
        Self { t: 2, lo: 1, hi: None }
    }
}

impl PropellerConfig {
    fn in_window(&self, c: usize) -> bool {
        c >= self.lo && self.hi.is_none_or(|h| c <= h)
    }
}

/// Census entry for one center `p` with `|L(p)| >= t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropellerEntry {
    pub point: usize,
    /// Lines through `p`, ordered by the position of their dual points on
    /// `l(p)`.
    pub lines: Vec<usize>,
    /// Points of `P` between each consecutive pair of lines.
    pub between_all: Vec<usize>,
    /// The same counted over `P'` only.
    pub between_heavy: Vec<usize>,
    pub qualifying_all: usize,
    pub qualifying_heavy: usize,
    /// `(pair, p1)` tests skipped because `p1` lies on one of the two lines.
    pub degenerate: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropellerCensus {
    pub config: PropellerConfig,
    /// `P'`: points on at least `t` lines.
    pub heavy: Vec<usize>,
    pub entries: Vec<PropellerEntry>,
}

/// Dual points of the lines through `p`, sorted along `l(p)`.
fn propeller<Q: ExactScalar>(
    s: &IncidenceStructure<Q>,
    p: usize,
) -> Result<(Vec<usize>, Vec<RationalPoint<Q>>)> {
    let lp = dualize_point(&s.points[p])?;
    let mut duals: Vec<(Q, usize, RationalPoint<Q>)> = s.lines_of[p]
        .iter()
        .map(|&l| {
            let q = dualize_line(&s.lines[l])?;
            Ok((lp.param(&q), l, q))
        })
        .collect::<Result<_>>()?;
    duals.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(duals.into_iter().map(|(_, l, q)| (l, q)).unzip())
}

/// For each `p` on at least `t` lines: the lines through `p` become
/// collinear dual points on `l(p)`; for each consecutive pair `(q, q')`,
/// counts the points `p1` lying between `l(q)` and `l(q')`, over all of `P`
/// and over `P'`.
pub fn propeller_census<Q: ExactScalar>(
    s: &IncidenceStructure<Q>,
    config: PropellerConfig,
) -> Result<PropellerCensus> {
    let heavy: Vec<usize> = (0..s.points.len())
        .filter(|&p| s.lines_of[p].len() >= config.t.max(2))
        .collect();
    let mut is_heavy = vec![false; s.points.len()];
    for &p in &heavy {
        is_heavy[p] = true;
    }
    let entries = heavy
        .par_iter()
        .map(|&p| {
            let (lines, duals) = propeller(s, p)?;
            let mut entry = PropellerEntry {
                point: p,
                lines,
                between_all: Vec::new(),
                between_heavy: Vec::new(),
                qualifying_all: 0,
                qualifying_heavy: 0,
                degenerate: 0,
            };
            for w in duals.windows(2) {
                let (mut all, mut hv) = (0, 0);
                for (i, p1) in s.points.iter().enumerate() {
                    match betweenness_check(&s.points[p], &w[0], &w[1], p1) {
                        Ok(b) if b.lies_between => {
                            all += 1;
                            hv += is_heavy[i] as usize;
                        }
                        Ok(_) => {}
                        Err(Error::DegenerateBetweenness(_)) => entry.degenerate += 1,
                        Err(e) => return Err(e),
                    }
                }
                entry.qualifying_all += config.in_window(all) as usize;
                entry.qualifying_heavy += config.in_window(hv) as usize;
                entry.between_all.push(all);
                entry.between_heavy.push(hv);
            }
            Ok(entry)
        })
        .collect::<Result<_>>()?;
    Ok(PropellerCensus {
        config,
        heavy,
        entries,
    })
}

/// Compares the normals of two lines by angle within the half-turn where
/// the first nonzero coordinate is positive.
fn normal_order<Q: ExactScalar>(l1: &RationalLine<Q>, l2: &RationalLine<Q>) -> Ordering {
    let (a1, b1, _) = l1.coefficients();
    let (a2, b2, _) = l2.coefficients();
    let cross = a1.clone() * b2.clone() - b1.clone() * a2.clone();
    Q::zero().cmp(&cross)
}

/// Whether the order of the dual points along `l(p)` is a rotation of the
/// angular order of the lines through `p`, or of its reverse.
pub fn orientation_consistent<Q: ExactScalar>(s: &IncidenceStructure<Q>, p: usize) -> Result<bool> {
    let (by_dual, _) = propeller(s, p)?;
    let mut by_angle = s.lines_of[p].clone();
    by_angle.sort_by(|&i, &j| normal_order(&s.lines[i], &s.lines[j]));
    let k = by_angle.len();
    if k <= 2 {
        return Ok(true);
    }
    let rotation_of = |seq: &[usize]| {
        (0..k).any(|r| (0..k).all(|i| seq[(i + r) % k] == by_dual[i]))
    };
    let reversed: Vec<usize> = by_angle.iter().rev().copied().collect();
    Ok(rotation_of(&by_angle) || rotation_of(&reversed))
}
