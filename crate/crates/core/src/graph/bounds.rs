use serde::Serialize;

use super::{build_graph, GraphError};
use crate::arrangement::{is_nonnested, validate, Arrangement, ValidationMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BoundKind {
    /// m <= (4 + 5/11) n for orthogonal arrangements.
    GeneralOrthogonal,
    /// m <= 3n - 8 for nonnested orthogonal arrangements with n >= 5.
    NonnestedOrthogonal,
    /// m <= 3n - 6 for nonnested acute arrangements with n >= 3.
    NonnestedAcute,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BoundStatus {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundCheck {
    pub bound: BoundKind,
    pub limit: f64,
    /// `limit - m`; negative on failure.
    pub slack: f64,
    pub status: BoundStatus,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub m: usize,
    pub checks: Vec<BoundCheck>,
}

impl BoundReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != BoundStatus::Fail)
    }

    pub fn get(&self, kind: BoundKind) -> &BoundCheck {
        self.checks.iter().find(|c| c.bound == kind).expect("every bound is reported")
    }
}

pub fn check_bounds(arr: &Arrangement) -> Result<BoundReport, GraphError> {
    let g = build_graph(arr)?;
    let n = g.vertex_count();
    let m = g.edge_count();
    let orthogonal = validate(arr, ValidationMode::Orthogonal).ok;
    let acute = orthogonal || validate(arr, ValidationMode::Acute).ok;
    let nonnested = is_nonnested(arr);
    let nf = n as f64;

    let check = |bound, limit: f64, applies: bool| {
        let slack = limit - m as f64;
        let status = if !applies {
            BoundStatus::NotApplicable
        } else if slack >= 0.0 {
            BoundStatus::Pass
        } else {
            BoundStatus::Fail
        };
        BoundCheck { bound, limit, slack, status }
    };

    let checks = vec![
        check(BoundKind::GeneralOrthogonal, (4.0 + 5.0 / 11.0) * nf, orthogonal),
        check(BoundKind::NonnestedOrthogonal, 3.0 * nf - 8.0, orthogonal && nonnested && n >= 5),
        check(BoundKind::NonnestedAcute, 3.0 * nf - 6.0, acute && nonnested && n >= 3),
    ];
    Ok(BoundReport { n, m, checks })
}
