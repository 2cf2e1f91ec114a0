use serde::Serialize;

use crate::error::{param, Result};
use crate::udg::crossings::{Bucket, CrossingStats};
use crate::udg::drawing::SzekelyDrawing;
use crate::udg::graph::UnitDistanceGraph;

/// Crossing lemma evaluated against one edge count.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LemmaEval {
    pub edges: u64,
    pub applicable: bool,
    /// `edges^3 / (100 |V|^2)`.
    pub rhs: f64,
    pub holds: bool,
}

impl LemmaEval {
    fn new(edges: u64, vertices: u64, crossings: u64) -> Self {
        let applicable = edges > 4 * vertices;
        let rhs = if vertices == 0 {
            0.0
        } else {
            (edges as f64).powi(3) / (100.0 * (vertices as f64).powi(2))
        };
        // exact: crossings >= E^3 / (100 V^2)  <=>  100 V^2 crossings >= E^3
        let holds = !applicable
            || 100u128 * (vertices as u128).pow(2) * crossings as u128 >= (edges as u128).pow(3);
        Self {
            edges,
            applicable,
            rhs,
            holds,
        }
    }
}

/// The crossing-number lower bound checked against the drawing's crossing
/// total, which upper-bounds the true crossing number.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LemmaCheck {
    pub vertices: u64,
    /// Drawing total.
    pub lhs: u64,
    /// Evaluation with `|E|` = number of arcs (multi-edges kept).
    pub arcs: LemmaEval,
    /// Evaluation with `|E|` = distinct endpoint pairs.
    pub simple: LemmaEval,
}

impl LemmaCheck {
    pub fn applicable(&self) -> bool {
        self.arcs.applicable
    }

    pub fn holds(&self) -> bool {
        self.arcs.holds && self.simple.holds
    }
}

pub fn crossing_lemma_check(
    graph: &UnitDistanceGraph,
    drawing: &SzekelyDrawing,
    stats: &CrossingStats,
) -> LemmaCheck {
    let v = graph.n() as u64;
    LemmaCheck {
        vertices: v,
        lhs: stats.total,
        arcs: LemmaEval::new(drawing.arcs().len() as u64, v, stats.total),
        simple: LemmaEval::new(drawing.simple_edge_count() as u64, v, stats.total),
    }
}

/// Census thresholds; all scaled by powers of `n` where noted.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CensusThresholds {
    /// Minimum number of other circles a circle must cross.
    pub t1: f64,
    /// Minimum degree, in units of `n^(1/3)`.
    pub t2: f64,
    /// Arc crossing window `[a n^(2/3), b n^(2/3)]`.
    pub a: f64,
    pub b: f64,
}

impl Default for CensusThresholds {
    fn default() -> Self {
        Self {
            t1: 1.0,
            t2: 1.0,
            a: 0.5,
            b: 2.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HeavyCensus {
    pub circles_crossing_many: usize,
    pub heavy_points: usize,
    pub arcs_in_window: usize,
    pub degree_threshold: f64,
    pub window: (f64, f64),
}

pub fn heavy_circle_census(
    graph: &UnitDistanceGraph,
    stats: &CrossingStats,
    thresholds: &CensusThresholds,
) -> Result<HeavyCensus> {
    if thresholds.a > thresholds.b {
        return Err(param("a", "window lower bound exceeds upper bound"));
    }
    let n = graph.n();
    let mut crossed = vec![0usize; n];
    for &(p, q) in stats.per_circle_pair.keys() {
        crossed[p] += 1;
        crossed[q] += 1;
    }
    let nf = n as f64;
    let degree_threshold = thresholds.t2 * nf.cbrt();
    let unit = nf.powf(2.0 / 3.0);
    let window = (thresholds.a * unit, thresholds.b * unit);
    Ok(HeavyCensus {
        circles_crossing_many: crossed.iter().filter(|&&c| c as f64 >= thresholds.t1).count(),
        heavy_points: (0..n)
            .filter(|&p| graph.degree(p) as f64 >= degree_threshold)
            .count(),
        arcs_in_window: stats
            .per_arc
            .iter()
            .filter(|&&c| (c as f64) >= window.0 && (c as f64) <= window.1)
            .count(),
        degree_threshold,
        window,
    })
}

/// Report block for `analyze-udg`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UdgReport {
    pub n: usize,
    pub u: usize,
    pub arcs: usize,
    /// `2u - arcs`.
    pub arc_deficit: usize,
    pub excluded_circles: usize,
    pub total_crossings: u64,
    pub max_pair_crossings: u32,
    pub histogram: Vec<(f64, Option<f64>, u64)>,
    pub lemma_check: LemmaCheck,
    pub census: HeavyCensus,
}

impl UdgReport {
    pub fn new(
        graph: &UnitDistanceGraph,
        drawing: &SzekelyDrawing,
        stats: &CrossingStats,
        census: HeavyCensus,
    ) -> Self {
        Self {
            n: graph.n(),
            u: graph.unit_count(),
            arcs: drawing.arcs().len(),
            arc_deficit: drawing.arc_deficit(graph),
            excluded_circles: drawing.excluded_circles().len(),
            total_crossings: stats.total,
            max_pair_crossings: stats.per_circle_pair.values().copied().max().unwrap_or(0),
            histogram: stats
                .histogram
                .iter()
                .map(|b: &Bucket| (b.lo, b.hi, b.count))
                .collect(),
            lemma_check: crossing_lemma_check(graph, drawing, stats),
            census,
        }
    }
}
