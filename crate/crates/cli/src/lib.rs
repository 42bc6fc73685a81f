//! Command-line front end: arrangement documents, JSON reports, SVG export.

pub mod commands;
pub mod document;
pub mod report;
pub mod svg;

use std::io::Write;
use std::path::Path;

use thiserror::Error;

use orthocircle::analysis::AnalysisError;
use orthocircle::arrangement::ArrangementError;
use orthocircle::generators::GeneratorError;
use orthocircle::geom::GeomError;
use orthocircle::graph::{GraphError, OracleError};

pub use commands::{main_with, run, Cli, Outcome};
pub use document::ArrangementDocument;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed document: {0}")]
    Format(String),
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
}

impl CliError {
    fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io { path: path.display().to_string(), source }
    }

    /// Every error is a usage, I/O or input problem.
    pub fn exit_code(&self) -> i32 {
        2
    }
}

pub(crate) fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

/// Writes to `path` through a temp file in the same directory, or to
/// `stdout` when no path is given.
pub(crate) fn write_output(path: Option<&Path>, bytes: &[u8], stdout: &mut dyn Write) -> Result<(), CliError> {
    let Some(path) = path else {
        return stdout.write_all(bytes).map_err(|e| CliError::io(Path::new("<stdout>"), e));
    };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| CliError::io(dir, e))?;
    tmp.write_all(bytes).map_err(|e| CliError::io(path, e))?;
    tmp.persist(path).map_err(|e| CliError::io(path, e.error))?;
    Ok(())
}
