use std::cmp::Ordering;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::incidence::structure::IncidenceStructure;
use crate::scalar::ExactScalar;

/// Piece of line `line` joining consecutive points `from`, `to` along it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Segment {
    pub line: usize,
    pub from: usize,
    pub to: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SegmentDrawing {
    pub segments: Vec<Segment>,
    /// Crossing segment index pairs `(a, b)`, `a < b`, sorted.
    pub crossings: Vec<(usize, usize)>,
    pub nonempty_lines: usize,
}

impl SegmentDrawing {
    pub fn total(&self) -> usize {
        self.crossings.len()
    }
}

/// Joins consecutive points on every line and counts pairs of segments
/// meeting at a point interior to both.
pub fn build_segment_drawing<Q: ExactScalar>(s: &IncidenceStructure<Q>) -> Result<SegmentDrawing> {
    // per line: points sorted by position, and the index of its first segment
    let mut order: Vec<Vec<(Q, usize)>> = Vec::with_capacity(s.lines.len());
    let mut first = Vec::with_capacity(s.lines.len());
    let mut segments = Vec::new();
    for (l, line) in s.lines.iter().enumerate() {
        let mut pts: Vec<(Q, usize)> = s.points_of[l]
            .iter()
            .map(|&p| (line.param(&s.points[p]), p))
            .collect();
        pts.sort();
        if pts.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidSet(format!("line {l} carries a repeated point")));
        }
        first.push(segments.len());
        segments.extend(pts.windows(2).map(|w| Segment {
            line: l,
            from: w[0].1,
            to: w[1].1,
        }));
        order.push(pts);
    }
    let nonempty_lines = order.iter().filter(|o| !o.is_empty()).count();

    // segment of line `l` whose interior holds position `t`
    let segment_at = |l: usize, t: &Q| -> Option<usize> {
        let pts = &order[l];
        let idx = pts.partition_point(|(u, _)| u.cmp(t) == Ordering::Less);
        if idx == 0 || idx == pts.len() || pts[idx].0 == *t {
            return None;
        }
        Some(first[l] + idx - 1)
    };

    let m = s.lines.len();
    let mut crossings: Vec<(usize, usize)> = (0..m)
        .into_par_iter()
        .flat_map_iter(|i| {
            let mut out = Vec::new();
            for j in i + 1..m {
                if order[i].len() < 2 || order[j].len() < 2 {
                    continue;
                }
                let Some(x) = s.lines[i].intersection(&s.lines[j]) else {
                    continue;
                };
                if let (Some(a), Some(b)) = (
                    segment_at(i, &s.lines[i].param(&x)),
                    segment_at(j, &s.lines[j].param(&x)),
                ) {
                    out.push((a.min(b), a.max(b)));
                }
            }
            out
        })
        .collect();
    crossings.sort_unstable();
    if crossings.windows(2).any(|w| {
        let key = |c: (usize, usize)| (segments[c.0].line, segments[c.1].line);
        key(w[0]) == key(w[1])
    }) {
        return Err(Error::InvariantViolation("two crossings on one line pair".into()));
    }
    if crossings.len() > m * m {
        return Err(Error::InvariantViolation(format!(
            "{} crossings exceed |L|^2 = {}",
            crossings.len(),
            m * m
        )));
    }
    let expected = s.incidences() - nonempty_lines;
    if segments.len() != expected {
        return Err(Error::InvariantViolation(format!(
            "{} segments, expected {expected}",
            segments.len()
        )));
    }
    Ok(SegmentDrawing {
        segments,
        crossings,
        nonempty_lines,
    })
}
