use std::collections::HashSet;
use std::f64::consts::{PI, TAU};

use super::IntersectionGraph;
use crate::geom::Point;

/// Number of distinct vertices in a boundary walk.
pub fn distinct_count(walk: &[usize]) -> usize {
    walk.iter().collect::<HashSet<_>>().len()
}

fn ccw_turn(from: f64, to: f64) -> f64 {
    let d = (to - from).rem_euclid(TAU);
    if d <= 1e-15 {
        TAU
    } else {
        d
    }
}

fn direction(g: &IntersectionGraph, from: usize, to: usize) -> f64 {
    (g.position(to) - g.position(from)).angle()
}

/// Neighbor of `v` reached by the smallest counterclockwise turn from `from_angle`.
fn next_ccw(g: &IntersectionGraph, v: usize, from_angle: f64) -> usize {
    *g.neighbors(v)
        .iter()
        .min_by(|&&a, &&b| {
            ccw_turn(from_angle, direction(g, v, a)).total_cmp(&ccw_turn(from_angle, direction(g, v, b)))
        })
        .expect("vertex has neighbors")
}

fn lex_smallest(g: &IntersectionGraph, vertices: &[usize]) -> usize {
    *vertices
        .iter()
        .min_by(|&&a, &&b| {
            let (pa, pb) = (g.position(a), g.position(b));
            pa.x.total_cmp(&pb.x).then(pa.y.total_cmp(&pb.y))
        })
        .expect("component is nonempty")
}

/// Counterclockwise walk around one component, keeping the outer face on the right.
fn component_walk(g: &IntersectionGraph, component: &[usize]) -> Vec<usize> {
    let start = lex_smallest(g, component);
    if g.degree(start) == 0 {
        return vec![start];
    }
    // Enter from the west: that direction lies in the unbounded face.
    let first = next_ccw(g, start, PI);
    let mut walk = vec![start];
    let (mut prev, mut cur) = (start, first);
    loop {
        let next = next_ccw(g, cur, direction(g, cur, prev));
        if cur == start && next == first {
            break;
        }
        walk.push(cur);
        prev = cur;
        cur = next;
    }
    walk
}

fn winding_number(polygon: &[Point], p: Point) -> i32 {
    let mut wn = 0;
    let n = polygon.len();
    for k in 0..n {
        let a = polygon[k];
        let b = polygon[(k + 1) % n];
        let is_left = (b - a).cross(p - a);
        if a.y <= p.y {
            if b.y > p.y && is_left > 0.0 {
                wn += 1;
            }
        } else if b.y <= p.y && is_left < 0.0 {
            wn -= 1;
        }
    }
    wn
}

pub(super) fn outer_walk(g: &IntersectionGraph) -> Vec<usize> {
    let components = g.components();
    let mut walks: Vec<Vec<usize>> = components.iter().map(|c| component_walk(g, c)).collect();
    let polygons: Vec<Vec<Point>> = walks
        .iter()
        .map(|w| w.iter().map(|&v| g.position(v)).collect())
        .collect();

    let exposed: Vec<bool> = walks
        .iter()
        .enumerate()
        .map(|(k, w)| {
            let probe = g.position(w[0]);
            !polygons
                .iter()
                .enumerate()
                .any(|(other, poly)| other != k && poly.len() >= 3 && winding_number(poly, probe) != 0)
        })
        .collect();

    let mut kept: Vec<Vec<usize>> = walks
        .drain(..)
        .zip(exposed)
        .filter_map(|(w, keep)| keep.then_some(w))
        .collect();
    kept.sort_by(|a, b| {
        let (pa, pb) = (g.position(a[0]), g.position(b[0]));
        pa.x.total_cmp(&pb.x).then(pa.y.total_cmp(&pb.y))
    });
    kept.concat()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Tolerance;

    fn graph(points: &[(f64, f64)], edges: &[(usize, usize)]) -> IntersectionGraph {
        IntersectionGraph::from_edges(
            (0..points.len()).map(|k| format!("v{k}").into()).collect(),
            points.iter().map(|&(x, y)| Point::new(x, y)).collect(),
            edges.iter().copied(),
            Tolerance::default(),
        )
        .unwrap()
    }

    #[test]
    fn triangle_boundary_is_counterclockwise() {
        let g = graph(&[(0.0, 0.0), (1.0, 1.0), (2.0, 0.0)], &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(g.outer_face_walk().unwrap(), vec![0, 2, 1]);
    }

    #[test]
    fn interior_vertex_is_not_on_boundary() {
        // Triangle with a center vertex joined to all corners.
        let g = graph(
            &[(0.0, 0.0), (4.0, 0.0), (2.0, 3.0), (2.0, 1.0)],
            &[(0, 1), (1, 2), (2, 0), (3, 0), (3, 1), (3, 2)],
        );
        let walk = g.outer_face_walk().unwrap();
        assert_eq!(walk, vec![0, 1, 2]);
    }

    #[test]
    fn path_walk_visits_middle_twice() {
        let g = graph(&[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)], &[(0, 1), (1, 2)]);
        let walk = g.outer_face_walk().unwrap();
        assert_eq!(walk, vec![0, 1, 2, 1]);
        assert_eq!(distinct_count(&walk), 3);
    }

    #[test]
    fn nested_component_is_skipped() {
        let g = graph(
            &[(0.0, 0.0), (10.0, 0.0), (5.0, 10.0), (5.0, 3.0), (6.0, 3.0), (20.0, 0.0)],
            &[(0, 1), (1, 2), (2, 0), (3, 4)],
        );
        let walk = g.outer_face_walk().unwrap();
        assert_eq!(walk, vec![0, 1, 2, 5]);
    }

    #[test]
    fn crossing_drawing_is_rejected() {
        let g = graph(
            &[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)],
            &[(0, 2), (1, 3)],
        );
        assert!(g.outer_face_walk().is_err());
    }
}
