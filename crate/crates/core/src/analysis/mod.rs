//! Red/black/green classification and claim audits on concrete arrangements.

mod audit;

pub use audit::{audit, AuditCheck, AuditEntry, AuditReport, AuditStatus, Witness};

use serde::Serialize;
use thiserror::Error;

use crate::arrangement::{depth_labeling, validate, Arrangement, DepthLabeling, RelationTable, ValidationMode};
use crate::geom::CircleId;
use crate::graph::{build_graph, GraphError, IntersectionGraph};

/// Largest number of deep crossing neighbors a red circle may have.
pub const RED_DEEP_NEIGHBOR_LIMIT: usize = 7;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AnalysisError {
    #[error("arrangement is not orthogonal")]
    NotOrthogonal,
    #[error("nested arrangement has no depth-1 circle crossing at most {RED_DEEP_NEIGHBOR_LIMIT} deep circles")]
    MissingRed,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Classification {
    pub red: CircleId,
    pub black: Vec<CircleId>,
    pub green: Vec<CircleId>,
    pub boundary_black: Vec<CircleId>,
    pub inner_black: Vec<CircleId>,
    /// Deep circles crossing the red circle.
    pub red_deep_neighbors: Vec<CircleId>,
    #[serde(skip)]
    pub(crate) indices: ClassIndices,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub(crate) struct ClassIndices {
    pub red: usize,
    pub black: Vec<usize>,
    pub green: Vec<usize>,
    pub boundary: Vec<usize>,
    pub inner: Vec<usize>,
    pub red_deep: Vec<usize>,
}

impl Classification {
    pub fn n_b(&self) -> usize {
        self.black.len()
    }

    /// Number of boundary black circles.
    pub fn b(&self) -> usize {
        self.boundary_black.len()
    }
}

fn deep_crossing_neighbors(rel: &RelationTable, depths: &DepthLabeling, c: usize) -> Vec<usize> {
    rel.crossing_neighbors(c).filter(|&k| depths.is_deep(k)).collect()
}

/// Picks the red circle: a depth-1 circle crossing at most seven deep
/// circles, smallest id first; `None` when nothing is nested.
pub fn select_red(arr: &Arrangement) -> Result<Option<Classification>, AnalysisError> {
    if !validate(arr, ValidationMode::Orthogonal).ok {
        return Err(AnalysisError::NotOrthogonal);
    }
    let g = build_graph(arr)?;
    let rel = arr.relations();
    let depths = depth_labeling(arr);
    classify(arr, &g, &rel, &depths)
}

pub(crate) fn classify(
    arr: &Arrangement,
    g: &IntersectionGraph,
    rel: &RelationTable,
    depths: &DepthLabeling,
) -> Result<Option<Classification>, AnalysisError> {
    if depths.max_depth() == 0 {
        return Ok(None);
    }
    let red = (0..arr.len())
        .filter(|&c| depths.depth(c) == 1)
        .filter(|&c| deep_crossing_neighbors(rel, depths, c).len() <= RED_DEEP_NEIGHBOR_LIMIT)
        .min_by(|&a, &b| arr.circle(a).id.cmp(&arr.circle(b).id))
        .ok_or(AnalysisError::MissingRed)?;

    let black: Vec<usize> = (0..arr.len()).filter(|&k| rel.contains(red, k)).collect();
    let is_black = |k: usize| black.binary_search(&k).is_ok();
    let green: Vec<usize> = (0..arr.len())
        .filter(|&k| rel.crossing(red, k) && black.iter().any(|&b| rel.crossing(k, b)))
        .collect();

    let sub = g.induced(&black);
    let walk = sub.outer_face_walk()?;
    let mut boundary: Vec<usize> = walk.iter().map(|&v| black[v]).collect();
    boundary.sort_unstable();
    boundary.dedup();
    let inner: Vec<usize> = black.iter().copied().filter(|k| boundary.binary_search(k).is_err()).collect();
    debug_assert!(green.iter().all(|&k| !is_black(k)));

    let ids = |v: &[usize]| v.iter().map(|&k| arr.circle(k).id.clone()).collect::<Vec<_>>();
    let red_deep = deep_crossing_neighbors(rel, depths, red);
    Ok(Some(Classification {
        red: arr.circle(red).id.clone(),
        black: ids(&black),
        green: ids(&green),
        boundary_black: ids(&boundary),
        inner_black: ids(&inner),
        red_deep_neighbors: ids(&red_deep),
        indices: ClassIndices { red, black, green, boundary, inner, red_deep },
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{make_b, make_nonnested_b};
    use crate::geom::{Circle, Point, Tolerance};

    #[test]
    fn nonnested_has_no_red() {
        assert_eq!(select_red(&make_nonnested_b(3).unwrap()).unwrap(), None);
    }

    #[test]
    fn single_nested_pair() {
        let arr = Arrangement::new(
            vec![
                Circle::new("outer", Point::ORIGIN, 3.0).unwrap(),
                Circle::new("inner", Point::new(0.5, 0.0), 1.0).unwrap(),
            ],
            Tolerance::default(),
        )
        .unwrap();
        let c = select_red(&arr).unwrap().unwrap();
        assert_eq!(c.red, CircleId::from("outer"));
        assert_eq!(c.black, vec![CircleId::from("inner")]);
        assert!(c.green.is_empty());
        assert_eq!(c.boundary_black.len(), 1);
    }

    #[test]
    fn two_wheels_pick_the_outer_hub() {
        let c = select_red(&make_b(2, 5).unwrap()).unwrap().unwrap();
        assert_eq!(c.red, CircleId::from("H02"));
        assert_eq!(c.n_b(), 6);
        assert_eq!(c.green.len(), 5);
        assert_eq!(c.inner_black, vec![CircleId::from("H01")]);
    }
}
