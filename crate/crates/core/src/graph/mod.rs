//! Intersection graphs and their straight-line drawings at the circle centers.

mod bounds;
mod crossing;
mod forbidden;
mod oracle;
mod outer;

pub use bounds::{check_bounds, BoundCheck, BoundKind, BoundReport, BoundStatus};
pub use crossing::{crossing_pairs, CrossingReport, EdgeCrossing};
pub use forbidden::{find_forbidden, ForbiddenKind, ForbiddenWitness};
pub use oracle::{max_edges_c3c4_free, OracleError, SmallGraph, MAX_ORACLE_VERTICES};
pub use outer::distinct_count;

use thiserror::Error;

use crate::arrangement::Arrangement;
use crate::geom::{CircleId, GeomError, PairRelation, Point, Tolerance};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GraphError {
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error("drawing is not plane: {count} edge crossings")]
    NotPlane { count: usize },
    #[error("edge ({0}, {1}) references a missing vertex or is a loop")]
    BadEdge(usize, usize),
}

#[derive(Debug, Clone, PartialEq)]
pub struct IntersectionGraph {
    ids: Vec<CircleId>,
    positions: Vec<Point>,
    /// Sorted `(u, v)` with `u < v`.
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    tol: Tolerance,
}

impl IntersectionGraph {
    /// Graph from an explicit edge list; duplicate edges collapse.
    pub fn from_edges(
        ids: Vec<CircleId>,
        positions: Vec<Point>,
        edges: impl IntoIterator<Item = (usize, usize)>,
        tol: Tolerance,
    ) -> Result<Self, GraphError> {
        assert_eq!(ids.len(), positions.len(), "one position per vertex");
        let n = ids.len();
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == v || u >= n || v >= n {
                return Err(GraphError::BadEdge(u, v));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        list.dedup();
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &list {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        Ok(IntersectionGraph { ids, positions, edges: list, adjacency, tol })
    }

    pub fn vertex_count(&self) -> usize {
        self.ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn ids(&self) -> &[CircleId] {
        &self.ids
    }

    pub fn id(&self, v: usize) -> &CircleId {
        &self.ids[v]
    }

    pub fn positions(&self) -> &[Point] {
        &self.positions
    }

    pub fn position(&self, v: usize) -> Point {
        self.positions[v]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn tol(&self) -> Tolerance {
        self.tol
    }

    /// Degrees sorted ascending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = (0..self.vertex_count()).map(|v| self.degree(v)).collect();
        seq.sort_unstable();
        seq
    }

    /// Induced subgraph on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> IntersectionGraph {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (k, &v) in vertices.iter().enumerate() {
            index[v] = k;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        IntersectionGraph::from_edges(
            vertices.iter().map(|&v| self.ids[v].clone()).collect(),
            vertices.iter().map(|&v| self.positions[v]).collect(),
            edges,
            self.tol,
        )
        .expect("induced edges are valid")
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn crossing_pairs(&self) -> CrossingReport {
        crossing_pairs(self)
    }

    pub fn outer_face(&self) -> Result<Vec<CircleId>, GraphError> {
        Ok(self.outer_face_walk()?.into_iter().map(|v| self.ids[v].clone()).collect())
    }

    /// Boundary walk of the unbounded face as vertex indices.
    ///
    /// The walk is counterclockwise and starts at the lexicographically
    /// smallest position. Vertices repeat where the boundary passes through a
    /// cut vertex. Components lying inside a bounded face of another
    /// component are skipped; the remaining components follow in order of
    /// their starting position.
    pub fn outer_face_walk(&self) -> Result<Vec<usize>, GraphError> {
        let report = crossing_pairs(self);
        if report.count() > 0 {
            return Err(GraphError::NotPlane { count: report.count() });
        }
        Ok(outer::outer_walk(self))
    }
}

/// Edges are the crossing pairs; vertices sit at the circle centers.
pub fn build_graph(arr: &Arrangement) -> Result<IntersectionGraph, GraphError> {
    let mut edges = Vec::new();
    for (i, j) in arr.pairs() {
        match arr.relation(i, j) {
            PairRelation::Crossing(_) => edges.push((i, j)),
            PairRelation::Tangent => {
                return Err(GeomError::Tangency {
                    a: arr.circle(i).id.clone(),
                    b: arr.circle(j).id.clone(),
                }
                .into())
            }
            _ => {}
        }
    }
    IntersectionGraph::from_edges(
        arr.circles().iter().map(|c| c.id.clone()).collect(),
        arr.circles().iter().map(|c| c.center).collect(),
        edges,
        arr.tol(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Circle;

    #[test]
    fn disjoint_pair_has_no_edges() {
        let arr = Arrangement::new(
            vec![
                Circle::new("a", Point::new(0.0, 0.0), 1.0).unwrap(),
                Circle::new("b", Point::new(5.0, 0.0), 1.0).unwrap(),
            ],
            Tolerance::default(),
        )
        .unwrap();
        let g = build_graph(&arr).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 0));
        assert_eq!(g.degree_sequence(), vec![0, 0]);
    }

    #[test]
    fn tangency_propagates() {
        let arr = Arrangement::new(
            vec![
                Circle::new("a", Point::new(0.0, 0.0), 1.0).unwrap(),
                Circle::new("b", Point::new(2.0, 0.0), 1.0).unwrap(),
            ],
            Tolerance::default(),
        )
        .unwrap();
        assert!(matches!(build_graph(&arr), Err(GraphError::Geom(GeomError::Tangency { .. }))));
    }

    #[test]
    fn single_vertex_degree_zero() {
        let g = IntersectionGraph::from_edges(
            vec!["a".into()],
            vec![Point::ORIGIN],
            [],
            Tolerance::default(),
        )
        .unwrap();
        assert_eq!(g.degree_sequence(), vec![0]);
        assert_eq!(g.outer_face().unwrap(), vec![CircleId::from("a")]);
    }

    #[test]
    fn bad_edges_rejected() {
        let ids = vec!["a".into(), "b".into()];
        let pos = vec![Point::ORIGIN, Point::new(1.0, 0.0)];
        assert!(IntersectionGraph::from_edges(ids.clone(), pos.clone(), [(0, 0)], Tolerance::default()).is_err());
        assert!(IntersectionGraph::from_edges(ids, pos, [(0, 2)], Tolerance::default()).is_err());
    }
}
