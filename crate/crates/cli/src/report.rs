//! JSON report envelopes and the per-command payloads.

use serde::Serialize;

use orthocircle::arrangement::{ValidationMode, ValidationReport};
use orthocircle::cells::FaceCensus;
use orthocircle::graph::{BoundReport, ForbiddenWitness};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Serialize)]
pub struct ReportDocument<'a, T: Serialize> {
    pub schema_version: &'static str,
    pub command: &'a str,
    pub report: T,
}

impl<'a, T: Serialize> ReportDocument<'a, T> {
    pub fn new(command: &'a str, report: T) -> Self {
        ReportDocument { schema_version: SCHEMA_VERSION, command, report }
    }

    pub fn to_text(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }
}

#[derive(Debug, Serialize)]
pub struct AnalyzeReport {
    pub mode: Option<ValidationMode>,
    pub validation: ValidationReport,
    pub n: usize,
    pub m: usize,
    pub nonnested: bool,
    pub crossing_count: usize,
    /// Entry k counts the circles of depth k.
    pub depth_histogram: Vec<usize>,
    /// Distinct vertices on the outer face; absent when the drawing has crossings.
    pub outer_face_size: Option<usize>,
    pub bounds: BoundReport,
    /// Only searched in orthogonal mode.
    pub forbidden_checked: bool,
    pub forbidden: Option<ForbiddenWitness>,
}

#[derive(Debug, Serialize)]
pub struct CellsReport {
    pub vertices: usize,
    pub arcs: usize,
    pub loops: usize,
    pub faces: usize,
    pub components: usize,
    pub euler_holds: bool,
    pub census: FaceCensus,
}

#[derive(Debug, Serialize)]
pub struct OracleReport {
    pub n: usize,
    pub max_edges: usize,
    pub witness_edges: Vec<(usize, usize)>,
    pub witness_degrees: Vec<usize>,
}
