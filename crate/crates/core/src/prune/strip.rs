use std::collections::BinaryHeap;

use serde::Serialize;

use crate::error::{param, Error, Result};
use crate::geom::PointSet;

#[derive(PartialEq)]
struct Top(f64);

impl Eq for Top {}

impl PartialOrd for Top {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Top {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.total_cmp(&other.0)
    }
}

/// Thinnest closed horizontal strip keeping enough unit pairs.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StripResult {
    pub delta: f64,
    pub y0: f64,
    pub y1: f64,
    /// Pairs the strip had to keep, `ceil(c7 x total)`.
    pub threshold: usize,
    pub total_pairs: usize,
    /// Pairs with both endpoints in the strip.
    pub strip_pairs: usize,
    /// Candidate points inside the strip, ascending.
    pub retained: Vec<usize>,
}

/// `ceil(c * total)` for `c` in `(0, 1]`.
pub(crate) fn fraction_threshold(name: &'static str, c: f64, total: usize) -> Result<usize> {
    if !c.is_finite() || c <= 0.0 {
        return Err(param(name, "must be in (0, 1]"));
    }
    if c > 1.0 {
        return Err(Error::Infeasible(format!("{name} = {c} exceeds 1")));
    }
    Ok(((c * total as f64).ceil() as usize).min(total))
}

/// Minimal strip `[y0, y0 + delta]` containing both endpoints of at least
/// `ceil(c7 x |pairs|)` of `pairs`; `points` are the candidates for the
/// retained set. Among equally thin strips the lowest wins.
pub fn min_strip_pairs<S: PointSet + ?Sized>(
    set: &S,
    points: &[usize],
    pairs: &[(usize, usize)],
    c7: f64,
) -> Result<StripResult> {
    if pairs.is_empty() {
        return Err(Error::NoCrossPair);
    }
    let threshold = fraction_threshold("c7", c7, pairs.len())?.max(1);
    let y = |i: usize| set.position(i)[1];
    let mut spans: Vec<(f64, f64)> = pairs
        .iter()
        .map(|&(a, b)| (y(a).min(y(b)), y(a).max(y(b))))
        .collect();
    spans.sort_by(|s, t| t.0.total_cmp(&s.0).then(s.1.total_cmp(&t.1)));

    // Sweep y0 downward; the heap keeps the `threshold` smallest tops seen.
    let mut heap: BinaryHeap<Top> = BinaryHeap::new();
    let mut best: Option<(f64, f64, f64)> = None;
    let mut k = 0;
    while k < spans.len() {
        let y0 = spans[k].0;
        while k < spans.len() && spans[k].0 == y0 {
            heap.push(Top(spans[k].1));
            if heap.len() > threshold {
                heap.pop();
            }
            k += 1;
        }
        if heap.len() == threshold {
            let top = heap.peek().unwrap().0;
            let delta = top - y0;
            if best.is_none_or(|(d, _, _)| delta <= d) {
                best = Some((delta, y0, top));
            }
        }
    }
    // y0 + delta may round below the top
    let (delta, y0, y1) = best.expect("threshold never exceeds the pair count");
    let inside = |i: usize| (y0..=y1).contains(&y(i));
    Ok(StripResult {
        delta,
        y0,
        y1,
        threshold,
        total_pairs: pairs.len(),
        strip_pairs: pairs.iter().filter(|&&(a, b)| inside(a) && inside(b)).count(),
        retained: points.iter().copied().filter(|&i| inside(i)).collect(),
    })
}

/// [`min_strip_pairs`] over the unit pairs joining `a` to `b`.
pub fn min_strip<S: PointSet + ?Sized>(
    set: &S,
    a: &[usize],
    b: &[usize],
    c7: f64,
) -> Result<StripResult> {
    let pairs: Vec<(usize, usize)> = a
        .iter()
        .flat_map(|&i| b.iter().map(move |&j| (i, j)))
        .filter(|&(i, j)| set.unit_pair(i, j))
        .collect();
    let mut points: Vec<usize> = a.iter().chain(b).copied().collect();
    points.sort_unstable();
    points.dedup();
    min_strip_pairs(set, &points, &pairs, c7)
}
