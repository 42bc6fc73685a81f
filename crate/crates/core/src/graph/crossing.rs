use serde::Serialize;

use super::IntersectionGraph;
use crate::geom::{CircleId, Point, Tolerance};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EdgeCrossing {
    pub first: (CircleId, CircleId),
    pub second: (CircleId, CircleId),
    pub point: Point,
    /// Set when the segments only touch or overlap within tolerance.
    pub degenerate: bool,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct CrossingReport {
    pub crossings: Vec<EdgeCrossing>,
}

impl CrossingReport {
    pub fn count(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_plane(&self) -> bool {
        self.crossings.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Left,
    Right,
    On,
}

fn side(a: Point, b: Point, c: Point, tol: Tolerance) -> Side {
    let u = b - a;
    let v = c - a;
    let det = u.cross(v);
    if det.abs() <= tol.rel_eps() * u.norm() * v.norm() {
        Side::On
    } else if det > 0.0 {
        Side::Left
    } else {
        Side::Right
    }
}

/// `c` is collinear with `ab` (already established); does it lie on the closed segment?
fn within_segment(a: Point, b: Point, c: Point, tol: Tolerance) -> bool {
    let ab = b - a;
    let len_sq = ab.norm_sq();
    let t = (c - a).dot(ab) / len_sq;
    let slack = tol.rel_eps();
    t >= -slack && t <= 1.0 + slack
}

/// Crossing point of two segments, or a touching witness for degenerate cases.
fn segment_crossing(
    p1: Point,
    p2: Point,
    q1: Point,
    q2: Point,
    tol: Tolerance,
) -> Option<(Point, bool)> {
    let s1 = side(p1, p2, q1, tol);
    let s2 = side(p1, p2, q2, tol);
    let s3 = side(q1, q2, p1, tol);
    let s4 = side(q1, q2, p2, tol);

    let opposite = |a: Side, b: Side| {
        matches!((a, b), (Side::Left, Side::Right) | (Side::Right, Side::Left))
    };
    if opposite(s1, s2) && opposite(s3, s4) {
        let r = p2 - p1;
        let s = q2 - q1;
        let t = (q1 - p1).cross(s) / r.cross(s);
        return Some((p1 + r * t, false));
    }

    // Touching or collinear overlap.
    let candidates = [
        (s1, p1, p2, q1),
        (s2, p1, p2, q2),
        (s3, q1, q2, p1),
        (s4, q1, q2, p2),
    ];
    for (s, a, b, c) in candidates {
        if s == Side::On && within_segment(a, b, c, tol) {
            return Some((c, true));
        }
    }
    None
}

/// All pairs of vertex-disjoint edges whose straight segments meet.
pub fn crossing_pairs(g: &IntersectionGraph) -> CrossingReport {
    let tol = g.tol();
    let edges = g.edges();
    let boxes: Vec<_> = edges
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (g.position(u), g.position(v));
            (a.x.min(b.x), a.x.max(b.x), a.y.min(b.y), a.y.max(b.y))
        })
        .collect();

    let mut crossings = Vec::new();
    for (i, &(a, b)) in edges.iter().enumerate() {
        let bi = boxes[i];
        let pad_i = (bi.1 - bi.0).max(bi.3 - bi.2) * tol.rel_eps();
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            let bj = boxes[j];
            if bi.1 + pad_i < bj.0 || bj.1 + pad_i < bi.0 || bi.3 + pad_i < bj.2 || bj.3 + pad_i < bi.2 {
                continue;
            }
            if let Some((point, degenerate)) =
                segment_crossing(g.position(a), g.position(b), g.position(c), g.position(d), tol)
            {
                crossings.push(EdgeCrossing {
                    first: (g.id(a).clone(), g.id(b).clone()),
                    second: (g.id(c).clone(), g.id(d).clone()),
                    point,
                    degenerate,
                });
            }
        }
    }
    CrossingReport { crossings }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square(edges: &[(usize, usize)]) -> IntersectionGraph {
        IntersectionGraph::from_edges(
            vec!["a".into(), "b".into(), "c".into(), "d".into()],
            vec![
                Point::new(0.0, 0.0),
                Point::new(1.0, 0.0),
                Point::new(1.0, 1.0),
                Point::new(0.0, 1.0),
            ],
            edges.iter().copied(),
            Tolerance::default(),
        )
        .unwrap()
    }

    #[test]
    fn square_with_diagonals_has_one_crossing() {
        let g = square(&[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]);
        let report = crossing_pairs(&g);
        assert_eq!(report.count(), 1);
        let x = &report.crossings[0];
        assert!(!x.degenerate);
        assert!(x.point.distance(Point::new(0.5, 0.5)) < 1e-12);
    }

    #[test]
    fn square_cycle_is_plane() {
        assert!(crossing_pairs(&square(&[(0, 1), (1, 2), (2, 3), (3, 0)])).is_plane());
    }

    #[test]
    fn touching_and_overlap_are_flagged() {
        // Vertex 2 sits in the middle of edge 0-1.
        let g = IntersectionGraph::from_edges(
            vec!["a".into(), "b".into(), "c".into(), "d".into()],
            vec![
                Point::new(0.0, 0.0),
                Point::new(2.0, 0.0),
                Point::new(1.0, 0.0),
                Point::new(1.0, 1.0),
            ],
            [(0, 1), (2, 3)],
            Tolerance::default(),
        )
        .unwrap();
        let report = crossing_pairs(&g);
        assert_eq!(report.count(), 1);
        assert!(report.crossings[0].degenerate);

        let overlap = IntersectionGraph::from_edges(
            vec!["a".into(), "b".into(), "c".into(), "d".into()],
            vec![
                Point::new(0.0, 0.0),
                Point::new(2.0, 0.0),
                Point::new(1.0, 0.0),
                Point::new(3.0, 0.0),
            ],
            [(0, 1), (2, 3)],
            Tolerance::default(),
        )
        .unwrap();
        assert_eq!(crossing_pairs(&overlap).count(), 1);
    }

    #[test]
    fn collinear_but_apart_is_not_a_crossing() {
        let g = IntersectionGraph::from_edges(
            vec!["a".into(), "b".into(), "c".into(), "d".into()],
            vec![
                Point::new(0.0, 0.0),
                Point::new(1.0, 0.0),
                Point::new(2.0, 0.0),
                Point::new(3.0, 0.0),
            ],
            [(0, 1), (2, 3)],
            Tolerance::default(),
        )
        .unwrap();
        assert!(crossing_pairs(&g).is_plane());
    }
}
