use serde::{Deserialize, Serialize};

use crate::error::{param, Result};
use crate::geom::{AnyPointSet, PointSet};
use crate::lunes::{typical_census, TypicalCensus, TypicalConfig};
use crate::prune::algo::PruneResult;
use crate::prune::epsilon::find_epsilon;
use crate::prune::squares::{normalize_pair, square_decompose_and_select, Cell};
use crate::prune::strip::{min_strip, min_strip_pairs, StripResult};
use crate::prune::summary::{summary_checks, SummaryChecks};
use crate::udg::build_udg;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PipelineConstants {
    pub c7: f64,
    pub c8: f64,
    pub typical: TypicalConfig,
}

impl Default for PipelineConstants {
    fn default() -> Self {
        Self {
            c7: 0.5,
            c8: 0.5,
            typical: TypicalConfig::default(),
        }
    }
}

impl PipelineConstants {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("c7", self.c7), ("c8", self.c8)] {
            if !(v > 0.0 && v <= 1.0) {
                return Err(param(name, "must be in (0, 1]"));
            }
        }
        self.typical.validate()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SelectionSummary {
    pub cell_side: f64,
    pub occupied_cells: usize,
    pub a_cell: Cell,
    pub b_cell: Cell,
    pub a_size: usize,
    pub b_size: usize,
    pub cross_count: usize,
    pub rotation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EpsilonSummary {
    pub epsilon: f64,
    pub threshold: usize,
    pub candidates: usize,
    /// Radii `(rho, next)` where the retained count grows from `rho` to `next`.
    pub non_monotone: Vec<(f64, f64)>,
}

/// Everything one pipeline run produces. Indices in `strip`, `prune` and
/// `census` refer to the strip set `P0`; `labels` maps them back to the input.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PipelineReport {
    pub n: usize,
    pub skip_squares: bool,
    pub selection: Option<SelectionSummary>,
    pub strip: StripResult,
    pub labels: Vec<usize>,
    pub epsilon: EpsilonSummary,
    pub prune: PruneResult,
    pub summary: SummaryChecks,
    pub census: TypicalCensus,
    pub warnings: Vec<String>,
}

/// Square pair selection, rotation, minimal strip, radius search and the
/// final checks. With `skip_squares` the strip is taken over all unit pairs
/// of the input in place.
pub fn run_pipeline(
    set: &AnyPointSet,
    constants: &PipelineConstants,
    skip_squares: bool,
) -> Result<PipelineReport> {
    constants.validate()?;
    let graph = build_udg(set);
    let mut warnings = Vec::new();
    let (selection, strip, labels, p0): (_, StripResult, Vec<usize>, AnyPointSet) = if skip_squares {
        let all: Vec<usize> = (0..set.len()).collect();
        let strip = min_strip_pairs(set, &all, graph.edges(), constants.c7)?;
        let labels = strip.retained.clone();
        (None, strip, labels.clone(), set.select(&labels))
    } else {
        let sel = square_decompose_and_select(set, &graph)?;
        let norm = normalize_pair(set, &sel)?;
        if sel.a.len() != sel.b.len() {
            warnings.push(format!(
                "square pair is unbalanced: |A| = {}, |B| = {}",
                sel.a.len(),
                sel.b.len()
            ));
        }
        let strip = min_strip(&norm.set, &norm.a(), &norm.b(), constants.c7)?;
        if strip.total_pairs != sel.cross_count {
            warnings.push(format!(
                "rotation changed the cross count from {} to {}",
                sel.cross_count, strip.total_pairs
            ));
        }
        let labels = strip.retained.iter().map(|&i| norm.origin[i]).collect();
        let p0 = AnyPointSet::Float(norm.set.select(&strip.retained));
        let summary = SelectionSummary {
            cell_side: sel.cell_side,
            occupied_cells: sel.cells.len(),
            a_cell: sel.a_cell,
            b_cell: sel.b_cell,
            a_size: sel.a.len(),
            b_size: sel.b.len(),
            cross_count: sel.cross_count,
            rotation: norm.angle,
        };
        (Some(summary), strip, labels, p0)
    };

    let search = find_epsilon(&p0, constants.c8)?;
    let non_monotone: Vec<(f64, f64)> = search
        .non_monotone
        .iter()
        .map(|&i| (search.candidates[i], search.candidates[i + 1]))
        .collect();
    if !non_monotone.is_empty() {
        warnings.push(format!(
            "retained unit count grows with the radius at {} candidate steps",
            non_monotone.len()
        ));
    }
    let summary = summary_checks(&p0, &search.result, strip.delta, search.epsilon, set.len())?;
    if summary.isolated > 0 {
        warnings.push(format!("{} survivors have no unit-neighbor left", summary.isolated));
    }
    let e = p0.select(&search.result.survivors);
    let census = typical_census(&e, &build_udg(&e), constants.typical)?;
    Ok(PipelineReport {
        n: set.len(),
        skip_squares,
        selection,
        strip,
        labels,
        epsilon: EpsilonSummary {
            epsilon: search.epsilon,
            threshold: search.threshold,
            candidates: search.candidates.len(),
            non_monotone,
        },
        prune: search.result,
        summary,
        census,
        warnings,
    })
}
