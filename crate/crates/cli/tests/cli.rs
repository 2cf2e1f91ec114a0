use std::path::Path;
use std::process::{Command, Output};

use epl_core::geom::io::PointFile;
use serde_json::Value;

fn epl(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_epl"))
        .args(args)
        .current_dir(dir)
        .env_remove("EPL_THREADS")
        .output()
        .unwrap()
}

fn ok(dir: &Path, args: &[&str]) {
    let out = epl(dir, args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
}

fn report(dir: &Path, name: &str) -> Value {
    serde_json::from_str(&std::fs::read_to_string(dir.join(name)).unwrap()).unwrap()
}

#[test]
fn grid_round_trip_counts_twelve() {
    let d = tempfile::tempdir().unwrap();
    ok(d.path(), &["generate", "--kind", "grid_lattice", "--k", "3", "--out", "g.pts"]);
    ok(d.path(), &["analyze-udg", "--input", "g.pts", "--report", "r.out", "--histogram-csv", "h.csv"]);
    let r = report(d.path(), "r.out");
    assert_eq!(r["blocks"]["udg"]["u"], 12);
    assert_eq!(r["blocks"]["udg"]["arcs"], 24);
    let csv = std::fs::read_to_string(d.path().join("h.csv")).unwrap();
    assert!(csv.starts_with("lo,hi,count\n"));
    // every arc of the 3x3 grid lands in one bucket
    let total: u64 = csv
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(total, 24);
}

#[test]
fn missing_input_names_the_path() {
    let d = tempfile::tempdir().unwrap();
    let out = epl(d.path(), &["analyze-udg", "--input", "absent.pts", "--report", "r.out"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("absent.pts"));
}

#[test]
fn malformed_input_names_the_field() {
    let d = tempfile::tempdir().unwrap();
    std::fs::write(d.path().join("bad.pts"), r#"{"backend":"exact","points":[[0,0]]}"#).unwrap();
    let out = epl(d.path(), &["analyze-udg", "--input", "bad.pts", "--report", "r.out"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("bad.pts") && err.contains("scale"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    let d = tempfile::tempdir().unwrap();
    assert_eq!(epl(d.path(), &["analyze-udg", "--report", "r.out"]).status.code(), Some(2));
    assert_eq!(epl(d.path(), &["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        epl(d.path(), &["generate", "--kind", "grid_lattice", "--out", "g.pts"]).status.code(),
        Some(2)
    );
    assert_eq!(
        epl(d.path(), &["validate-trig", "--caps", "1,2", "--report", "r.out"]).status.code(),
        Some(2)
    );
}

#[test]
fn infeasible_fraction_is_a_domain_error() {
    let d = tempfile::tempdir().unwrap();
    ok(d.path(), &["generate", "--kind", "grid_lattice", "--k", "4", "--out", "g.pts"]);
    let out = epl(d.path(), &["prune", "--input", "g.pts", "--c7", "1.5", "--c8", "0.5", "--skip-squares", "--report", "p.out"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("c7"));
}

#[test]
fn trig_reports_are_deterministic() {
    let d = tempfile::tempdir().unwrap();
    let args = ["validate-trig", "--samples", "1000", "--seed", "1", "--report", "t.out"];
    ok(d.path(), &args);
    let first = std::fs::read(d.path().join("t.out")).unwrap();
    ok(d.path(), &args);
    assert_eq!(first, std::fs::read(d.path().join("t.out")).unwrap());
    let r = report(d.path(), "t.out");
    let ratio = r["blocks"]["cubic_probe"]["ratio"].as_f64().unwrap();
    assert!((ratio - 50.0).abs() < 1.0);
}

#[test]
fn generated_files_parse_back_unchanged() {
    let d = tempfile::tempdir().unwrap();
    for args in [
        ["--kind", "random_disk", "--n", "40", "--seed", "3"],
        ["--kind", "two_cluster", "--n", "40", "--seed", "3"],
        ["--kind", "cocircular", "--n", "9", "--seed", "0"],
        ["--kind", "st_grid", "--k", "2", "--seed", "0"],
    ] {
        let mut full = vec!["generate"];
        full.extend(args);
        full.extend(["--out", "x.pts"]);
        ok(d.path(), &full);
        let text = std::fs::read_to_string(d.path().join("x.pts")).unwrap();
        assert_eq!(PointFile::parse(&text).unwrap().to_json(), text);
    }
}

#[test]
fn st_grid_incidences_and_duality() {
    let d = tempfile::tempdir().unwrap();
    ok(d.path(), &["generate", "--kind", "st_grid", "--k", "2", "--out", "s.pts"]);
    ok(
        d.path(),
        &["analyze-incidence", "--points", "s.pts", "--lines", "s.pts.lines", "--dual", "--auto-translate", "--propeller", "2", "--report", "i.out"],
    );
    let r = report(d.path(), "i.out");
    assert_eq!(r["blocks"]["incidence"]["incidences"], 16);
    assert_eq!(r["blocks"]["dual"]["dual_incidences"], 16);
    assert!(r["blocks"]["translation"].is_array());
    assert!(r["blocks"]["incidence"]["st_bound"]["holds"].as_bool().unwrap());
}

#[test]
fn prune_is_identical_across_thread_counts() {
    let d = tempfile::tempdir().unwrap();
    ok(d.path(), &["generate", "--kind", "two_cluster", "--n", "100", "--seed", "7", "--out", "t.pts"]);
    let run = |threads: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_epl"))
            .args(["prune", "--input", "t.pts", "--c7", "0.5", "--c8", "0.5", "--report", "p.out", "--removals-csv", "rm.csv"])
            .current_dir(d.path())
            .env("EPL_THREADS", threads)
            .output()
            .unwrap();
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        (
            std::fs::read(d.path().join("p.out")).unwrap(),
            std::fs::read(d.path().join("rm.csv")).unwrap(),
        )
    };
    let one = run("1");
    assert_eq!(one, run("4"));
    assert_eq!(one, run("1"));
}

#[test]
fn lune_census_csv_matches_the_report() {
    let d = tempfile::tempdir().unwrap();
    ok(d.path(), &["generate", "--kind", "grid_lattice", "--k", "3", "--out", "g.pts"]);
    ok(d.path(), &["analyze-lunes", "--input", "g.pts", "--report", "l.out", "--census-csv", "c.csv", "--cross-validate"]);
    let r = report(d.path(), "l.out");
    let typical = r["blocks"]["lunes"]["typical_count"].as_u64().unwrap();
    let csv = std::fs::read_to_string(d.path().join("c.csv")).unwrap();
    let rows: Vec<&str> = csv.lines().skip(1).collect();
    assert_eq!(rows.len(), 9);
    assert_eq!(rows.iter().filter(|l| l.ends_with("true")).count() as u64, typical);
    assert!(r["blocks"]["arc_lune_check"]["mismatches"].as_array().unwrap().is_empty());
}
