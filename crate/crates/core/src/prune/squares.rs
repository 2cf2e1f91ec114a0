use std::collections::BTreeMap;
use std::f64::consts::SQRT_2;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{FloatPointSet, PointSet, DEFAULT_TOLERANCE};
use crate::udg::UnitDistanceGraph;

/// Side of the square grid, `1 / (100 sqrt 2)`.
pub const CELL_SIDE: f64 = 1.0 / (100.0 * SQRT_2);

pub type Cell = (i64, i64);

pub fn cell_of(p: [f64; 2]) -> Cell {
    ((p[0] / CELL_SIDE).floor() as i64, (p[1] / CELL_SIDE).floor() as i64)
}

/// Center of a grid cell.
pub fn cell_center(c: Cell) -> [f64; 2] {
    [(c.0 as f64 + 0.5) * CELL_SIDE, (c.1 as f64 + 0.5) * CELL_SIDE]
}

/// The pair of grid cells joined by the most unit pairs.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SquarePairSelection {
    pub cell_side: f64,
    /// Occupied cells with their member indices, ascending.
    pub cells: BTreeMap<Cell, Vec<usize>>,
    /// Lexicographically smaller cell of the chosen pair.
    pub a_cell: Cell,
    pub b_cell: Cell,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub cross_count: usize,
}

/// Unit pairs counted per unordered cell pair, equal cells skipped.
pub fn cross_counts<S: PointSet + ?Sized>(
    set: &S,
    graph: &UnitDistanceGraph,
) -> BTreeMap<(Cell, Cell), usize> {
    let cells: Vec<Cell> = (0..set.len()).map(|i| cell_of(set.position(i))).collect();
    let mut counts = BTreeMap::new();
    for &(i, j) in graph.edges() {
        let (ci, cj) = (cells[i], cells[j]);
        if ci != cj {
            *counts.entry((ci.min(cj), ci.max(cj))).or_insert(0) += 1;
        }
    }
    counts
}

/// Buckets the set into the origin-anchored grid and picks the cell pair
/// with the most unit pairs across; ties go to the lexicographically
/// smallest pair.
pub fn square_decompose_and_select<S: PointSet + ?Sized>(
    set: &S,
    graph: &UnitDistanceGraph,
) -> Result<SquarePairSelection> {
    let mut cells: BTreeMap<Cell, Vec<usize>> = BTreeMap::new();
    for i in 0..set.len() {
        cells.entry(cell_of(set.position(i))).or_default().push(i);
    }
    let mut best: Option<((Cell, Cell), usize)> = None;
    for (pair, count) in cross_counts(set, graph) {
        if best.is_none_or(|(_, c)| count > c) {
            best = Some((pair, count));
        }
    }
    let ((a_cell, b_cell), cross_count) = best.ok_or(Error::NoCrossPair)?;
    Ok(SquarePairSelection {
        cell_side: CELL_SIDE,
        a: cells[&a_cell].clone(),
        b: cells[&b_cell].clone(),
        cells,
        a_cell,
        b_cell,
        cross_count,
    })
}

/// The chosen pair after a rigid rotation putting `A` left of `B` on a
/// horizontal center line.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedPair {
    /// Rotation applied, counterclockwise, about `pivot`.
    pub angle: f64,
    pub pivot: [f64; 2],
    /// `A` then `B` points in ascending original index order.
    pub set: FloatPointSet<f64>,
    /// Original index of each point of `set`.
    pub origin: Vec<usize>,
    /// Whether each point of `set` came from `A`.
    pub in_a: Vec<bool>,
}

impl NormalizedPair {
    pub fn a(&self) -> Vec<usize> {
        (0..self.origin.len()).filter(|&i| self.in_a[i]).collect()
    }

    pub fn b(&self) -> Vec<usize> {
        (0..self.origin.len()).filter(|&i| !self.in_a[i]).collect()
    }
}

/// Rotates `A` and `B` about the midpoint of their cell centers so that the
/// center line is horizontal with `A` on the left.
pub fn normalize_pair<S: PointSet + ?Sized>(
    set: &S,
    selection: &SquarePairSelection,
) -> Result<NormalizedPair> {
    let (ca, cb) = (cell_center(selection.a_cell), cell_center(selection.b_cell));
    let pivot = [(ca[0] + cb[0]) / 2.0, (ca[1] + cb[1]) / 2.0];
    let angle = -(cb[1] - ca[1]).atan2(cb[0] - ca[0]);
    let (sin, cos) = angle.sin_cos();
    let rotate = |p: [f64; 2]| {
        if angle == 0.0 {
            return p;
        }
        let (x, y) = (p[0] - pivot[0], p[1] - pivot[1]);
        [pivot[0] + cos * x - sin * y, pivot[1] + sin * x + cos * y]
    };
    let mut origin: Vec<usize> = selection.a.iter().chain(&selection.b).copied().collect();
    origin.sort_unstable();
    let in_a: Vec<bool> = origin
        .iter()
        .map(|i| selection.a.binary_search(i).is_ok())
        .collect();
    let points = origin.iter().map(|&i| rotate(set.position(i))).collect();
    Ok(NormalizedPair {
        angle,
        pivot,
        set: FloatPointSet::new(points, DEFAULT_TOLERANCE)?,
        origin,
        in_a,
    })
}
