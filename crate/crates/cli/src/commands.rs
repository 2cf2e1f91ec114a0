use std::f64::consts::FRAC_PI_2;
use std::path::Path;

use epl_core::gen::{generate, GeneratorKind, GeneratorSpec, Generated};
use epl_core::geom::io::PointFile;
use epl_core::geom::PointSet;
use epl_core::incidence::io::{rational_point_file, rational_points, LinesFile};
use epl_core::incidence::{
    build_segment_drawing, count_incidences, dualizable_part, dualize_configuration,
    find_translation, orientation_consistent, propeller_census, sharpness, st_bound_check,
    translate, PropellerConfig,
};
use epl_core::lunes::{cross_validate_arcs, typical_census, TypicalConfig};
use epl_core::prune::{run_pipeline, PipelineConstants};
use epl_core::report::ReportDocument;
use epl_core::trig::{
    chord_bounds_check, curvtri_eval, remainder_scan, CurvTriInstance, DomainCaps, Family,
    C_THIRD, C_X, C_Y, SAFETY_FACTOR,
};
use epl_core::udg::{
    build_drawing, build_udg, count_crossings_with_edges, default_bucket_edges,
    heavy_circle_census, CensusThresholds, UdgReport,
};
use epl_core::{Error, Rational};
use serde::Serialize;
use serde_json::json;

use crate::args::{
    Command, GenerateArgs, IncidenceArgs, Kind, LunesArgs, PruneArgs, TrigArgs, TypicalArgs,
    UdgArgs,
};
use crate::output::{in_file, load_point_set, read_point_file, read_text, write_csv, write_text};
use crate::CliError;

pub fn execute(command: &Command) -> Result<(), CliError> {
    match command {
        Command::Generate(a) => generate_cmd(a),
        Command::AnalyzeUdg(a) => finish(&a.report, analyze_udg(a)?),
        Command::AnalyzeLunes(a) => finish(&a.report, analyze_lunes(a)?),
        Command::Prune(a) => finish(&a.report, prune(a)?),
        Command::AnalyzeIncidence(a) => finish(&a.report, analyze_incidence(a)?),
        Command::ValidateTrig(a) => finish(&a.report, validate_trig(a)?),
    }
}

fn finish(path: &Path, doc: ReportDocument) -> Result<(), CliError> {
    write_text(path, &doc.to_json())
}

fn typical(a: &TypicalArgs) -> TypicalConfig {
    TypicalConfig {
        c4: a.c4,
        c5: a.c5,
        c5p: a.c5p,
    }
}

fn generate_cmd(a: &GenerateArgs) -> Result<(), CliError> {
    let (kind, size) = match a.kind {
        Kind::GridLattice => (GeneratorKind::GridLattice, a.k),
        Kind::StGrid => (GeneratorKind::StGrid, a.k),
        Kind::RandomDisk => (GeneratorKind::RandomDisk, a.n),
        Kind::Cocircular => (GeneratorKind::Cocircular, a.n),
        Kind::TwoCluster => (GeneratorKind::TwoCluster, a.n),
        Kind::MoserSpindle => (GeneratorKind::MoserSpindle, Some(0)),
    };
    let size = size.ok_or_else(|| {
        let flag = if matches!(a.kind, Kind::GridLattice | Kind::StGrid) { "--k" } else { "--n" };
        CliError::Usage(format!("generate --kind {}: {flag} is required", kind.name()))
    })?;
    let spec = GeneratorSpec {
        kind,
        size,
        seed: a.seed,
    };
    match generate::<Rational>(&spec)? {
        Generated::Points(set) => write_text(&a.out, &PointFile::from(&set).to_json()),
        Generated::Incidence(points, lines) => {
            let lines_out = a.lines_out.clone().unwrap_or_else(|| {
                let mut p = a.out.clone().into_os_string();
                p.push(".lines");
                p.into()
            });
            write_text(&a.out, &rational_point_file(&points)?.to_json())?;
            write_text(&lines_out, &LinesFile::from_lines(&lines)?.to_json())
        }
    }
}

fn analyze_udg(a: &UdgArgs) -> Result<ReportDocument, CliError> {
    let mut doc = ReportDocument::new("analyze-udg", a)?;
    let set = load_point_set(&a.input, &mut doc)?;
    let edges = match &a.buckets {
        Some(e) if e.len() < 2 || e.windows(2).any(|w| !(w[0] < w[1])) => {
            return Err(CliError::Usage(
                "--buckets: expected at least two strictly increasing edges".into(),
            ))
        }
        Some(e) => e.clone(),
        None => default_bucket_edges(set.len()),
    };
    let graph = build_udg(&set);
    let drawing = build_drawing(&graph, &set)?;
    let stats = count_crossings_with_edges(&graph, &drawing, &set, &edges)?;
    let thresholds = CensusThresholds {
        t1: a.t1,
        t2: a.t2,
        a: a.a,
        b: a.b,
    };
    let census = heavy_circle_census(&graph, &stats, &thresholds)?;
    let report = UdgReport::new(&graph, &drawing, &stats, census);
    if report.arc_deficit > 0 {
        doc.warn(format!(
            "{} circles carry fewer than two points; the drawing has {} arcs instead of 2u = {}",
            report.excluded_circles,
            report.arcs,
            2 * report.u
        ));
    }
    if let Some(path) = &a.histogram_csv {
        write_csv(path, &["lo", "hi", "count"], &report.histogram)?;
    }
    doc.block("udg", &report)?;
    Ok(doc)
}

fn analyze_lunes(a: &LunesArgs) -> Result<ReportDocument, CliError> {
    let mut doc = ReportDocument::new("analyze-lunes", a)?;
    let set = load_point_set(&a.input, &mut doc)?;
    let graph = build_udg(&set);
    let census = typical_census(&set, &graph, typical(&a.typical))?;
    if census.degenerate_pairs > 0 {
        doc.warn(format!(
            "{} consecutive pairs are antipodal and have no lune",
            census.degenerate_pairs
        ));
    }
    if let Some(path) = &a.census_csv {
        write_csv(
            path,
            &["point_index", "k", "qualifying_pairs", "is_typical"],
            &census.rows(),
        )?;
    }
    doc.block("lunes", &census)?;
    if a.cross_validate {
        let drawing = build_drawing(&graph, &set)?;
        let check = cross_validate_arcs(&set, &drawing);
        if !check.passed() {
            doc.warn(format!(
                "{} arc crossings disagree with lune membership",
                check.mismatches.len()
            ));
        }
        doc.block("arc_lune_check", &check)?;
    }
    Ok(doc)
}

#[derive(Serialize)]
struct RemovalRow {
    point: usize,
    circle: usize,
    pass: usize,
    lost_pairs: usize,
}

fn prune(a: &PruneArgs) -> Result<ReportDocument, CliError> {
    let mut doc = ReportDocument::new("prune", a)?;
    let set = load_point_set(&a.input, &mut doc)?;
    let constants = PipelineConstants {
        c7: a.c7,
        c8: a.c8,
        typical: typical(&a.typical),
    };
    let mut report = run_pipeline(&set, &constants, a.skip_squares)?;
    for w in std::mem::take(&mut report.warnings) {
        doc.warn(w);
    }
    if let Some(path) = &a.removals_csv {
        let rows: Vec<RemovalRow> = report
            .prune
            .removals
            .iter()
            .map(|r| RemovalRow {
                point: r.point,
                circle: r.circle,
                pass: r.pass,
                lost_pairs: r.lost_pairs,
            })
            .collect();
        write_csv(path, &["point", "circle", "pass", "lost_pairs"], &rows)?;
    }
    doc.block("pipeline", &report)?;
    Ok(doc)
}

fn analyze_incidence(a: &IncidenceArgs) -> Result<ReportDocument, CliError> {
    let mut doc = ReportDocument::new("analyze-incidence", a)?;
    let file = read_point_file(&a.points)?;
    let mut points = in_file(&a.points, rational_points::<Rational>(&file))?;
    let lines_file = in_file(&a.lines, LinesFile::parse(&read_text(&a.lines)?))?;
    let mut lines = in_file(&a.lines, lines_file.to_lines::<Rational>())?;
    if a.auto_translate {
        let t = find_translation(&points, &lines);
        (points, lines) = translate(&points, &lines, &t);
        doc.block("translation", &[t.x.to_string(), t.y.to_string()])?;
    }

    let s = count_incidences(points, lines);
    let segments = build_segment_drawing(&s)?;
    let bound = st_bound_check(&s);
    if !bound.holds {
        return Err(Error::InvariantViolation(format!(
            "incidence bound fails: {} segments exceed the bound by {}",
            bound.edges, -bound.slack
        ))
        .into());
    }
    doc.block(
        "incidence",
        &json!({
            "points": s.points.len(),
            "lines": s.lines.len(),
            "incidences": s.incidences(),
            "sharpness": sharpness(&s),
            "st_bound": bound,
            "segments": segments.segments.len(),
            "segment_crossings": segments.total(),
            "nonempty_lines": segments.nonempty_lines,
        }),
    )?;

    if !(a.dual || a.propeller.is_some()) {
        return Ok(doc);
    }
    let (kept_points, kept_lines, filter) = dualizable_part(&s.points, &s.lines);
    if !filter.dropped_points.is_empty() || !filter.dropped_lines.is_empty() {
        doc.warn(format!(
            "{} points at the origin and {} lines through it are left out of the dual analysis",
            filter.dropped_points.len(),
            filter.dropped_lines.len()
        ));
    }
    let kept = count_incidences(kept_points, kept_lines);
    if a.dual {
        let dual = dualize_configuration(&kept)?;
        if dual.incidences() != kept.incidences() {
            return Err(Error::InvariantViolation(format!(
                "duality changed the incidence count from {} to {}",
                kept.incidences(),
                dual.incidences()
            ))
            .into());
        }
        doc.block(
            "dual",
            &json!({
                "filter": filter,
                "incidences": kept.incidences(),
                "dual_incidences": dual.incidences(),
            }),
        )?;
    }
    if let Some(t) = a.propeller {
        let config = PropellerConfig {
            t,
            lo: a.window_lo,
            hi: a.window_hi,
        };
        let census = propeller_census(&kept, config)?;
        let mut inconsistent = Vec::new();
        for e in &census.entries {
            if !orientation_consistent(&kept, e.point)? {
                inconsistent.push(e.point);
            }
        }
        if !inconsistent.is_empty() {
            doc.warn(format!(
                "{} centers order their lines differently in the dual",
                inconsistent.len()
            ));
        }
        doc.block(
            "propeller",
            &json!({
                "census": census,
                "orientation_inconsistent": inconsistent,
            }),
        )?;
    }
    Ok(doc)
}

const CHORD_SAMPLES: usize = 10_000;

fn validate_trig(a: &TrigArgs) -> Result<ReportDocument, CliError> {
    let caps = match a.caps.as_deref() {
        None => DomainCaps::LEMMA,
        Some(&[alpha, beta, theta]) => DomainCaps { alpha, beta, theta },
        Some(_) => return Err(CliError::Usage("--caps: expected three values a,b,t".into())),
    };
    let mut doc = ReportDocument::new("validate-trig", a)?;

    let lo = 1e-6;
    let span = FRAC_PI_2 - 2.0 * lo;
    let mut failures = Vec::new();
    let mut min_margin = f64::INFINITY;
    for i in 0..CHORD_SAMPLES {
        let theta = lo + span * (i as f64 + 0.5) / CHORD_SAMPLES as f64;
        let b = chord_bounds_check(theta)?;
        min_margin = min_margin.min((b.value - b.lower).min(b.upper - b.value));
        if !b.holds {
            failures.push(theta);
        }
    }
    if !failures.is_empty() {
        doc.warn(format!("chord bounds fail at {} samples", failures.len()));
    }
    doc.block(
        "chord",
        &json!({"samples": CHORD_SAMPLES, "failures": failures, "min_margin": min_margin}),
    )?;

    let full = remainder_scan::<f64>(caps, Family::Full, a.samples, a.seed)?;
    let symmetric = remainder_scan::<f64>(caps, Family::Symmetric, a.samples, a.seed)?;
    let boundary = remainder_scan::<f64>(caps, Family::Boundary, a.samples, a.seed)?;
    let audit = json!({
        "frozen": {"c_x": C_X, "c_y": C_Y, "c_third": C_THIRD},
        "scanned": {
            "c_x": full.x_term.value * SAFETY_FACTOR,
            "c_y": full.y_term.value * SAFETY_FACTOR,
            "c_third": full.third_arc.value * SAFETY_FACTOR,
        },
        "x_holds": full.x_term.value <= C_X,
        "y_holds": full.y_term.value <= C_Y,
        "third_arc_holds": full.third_arc.value <= C_THIRD,
    });
    for (name, scanned, frozen) in [
        ("x", full.x_term.value, C_X),
        ("y", full.y_term.value, C_Y),
        ("third-arc", full.third_arc.value, C_THIRD),
    ] {
        if scanned > frozen {
            doc.warn(format!(
                "{name} term ratio {scanned} exceeds the frozen constant {frozen}"
            ));
        }
    }
    let probe = curvtri_eval(CurvTriInstance::new(1e-2f64, 0.0, 0.0));
    let probe_ratio = probe.remainder.abs() / 1e-6;
    doc.warn(format!(
        "cubic remainder ratio reaches {:.6} on the beta = theta = 0 family (scan) and {:.6} at alpha = 0.01; it grows like 1 / (2 alpha)",
        boundary.cubic.value, probe_ratio
    ));
    doc.block(
        "scans",
        &json!({"full": full, "symmetric": symmetric, "boundary": boundary}),
    )?;
    doc.block("audit", &audit)?;
    doc.block(
        "cubic_probe",
        &json!({"alpha": 1e-2, "beta": 0.0, "theta": 0.0, "remainder": probe.remainder, "ratio": probe_ratio}),
    )?;
    Ok(doc)
}
