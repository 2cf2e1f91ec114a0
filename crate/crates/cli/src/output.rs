use std::fs;
use std::path::Path;

use epl_core::geom::io::PointFile;
use epl_core::geom::{AnyPointSet, FloatPointSet};
use epl_core::report::ReportDocument;
use serde::Serialize;

use crate::args::InputArgs;
use crate::CliError;

fn shown(path: &Path) -> String {
    path.display().to_string()
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: shown(path),
        source,
    })
}

pub fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: shown(path),
        source,
    })
}

/// Attaches the file name to a parse error.
pub fn in_file<T>(path: &Path, r: epl_core::Result<T>) -> Result<T, CliError> {
    r.map_err(|source| CliError::Input {
        path: shown(path),
        source,
    })
}

pub fn read_point_file(path: &Path) -> Result<PointFile, CliError> {
    let text = read_text(path)?;
    in_file(path, PointFile::parse(&text))
}

/// Loads `--input`, applying `--tolerance` to float files.
pub fn load_point_set(args: &InputArgs, doc: &mut ReportDocument) -> Result<AnyPointSet, CliError> {
    let file = read_point_file(&args.input)?;
    let set = in_file(&args.input, file.into_point_set())?;
    match (set, args.tolerance) {
        (AnyPointSet::Float(s), Some(t)) => {
            let s = in_file(&args.input, FloatPointSet::new(s.points().to_vec(), t))?;
            Ok(AnyPointSet::Float(s))
        }
        (set @ AnyPointSet::Exact(_), Some(_)) => {
            doc.warn("--tolerance ignored: the input uses the exact backend");
            Ok(set)
        }
        (set, None) => Ok(set),
    }
}

pub fn write_csv<R: Serialize>(path: &Path, header: &[&str], rows: &[R]) -> Result<(), CliError> {
    let io = |e: csv::Error| CliError::Io {
        path: shown(path),
        source: e.into(),
    };
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_path(path)
        .map_err(io)?;
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.serialize(row).map_err(io)?;
    }
    w.flush().map_err(|source| CliError::Io {
        path: shown(path),
        source,
    })
}
