use std::f64::consts::{PI, SQRT_2};

use orthocircle::arrangement::Arrangement;
use orthocircle::cells::{build_subdivision, ArcSubdivision, CellsError};
use orthocircle::generators::{augment_triangles, make_b, make_nonnested_b, make_random_nonnested};
use orthocircle::geom::{Circle, Point, Tolerance};

fn arr(circles: &[(f64, f64, f64)]) -> Arrangement {
    Arrangement::new(
        circles
            .iter()
            .enumerate()
            .map(|(k, &(x, y, r))| Circle::new(format!("c{k}"), Point::new(x, y), r).unwrap())
            .collect(),
        Tolerance::default(),
    )
    .unwrap()
}

/// Total area of bounded faces: outer cycle area plus (negative) hole areas.
fn bounded_area(sub: &ArcSubdivision) -> f64 {
    sub.bounded_faces()
        .map(|f| {
            let outer = sub.cycles()[f.outer.unwrap()].signed_area;
            outer + f.holes.iter().map(|&h| sub.cycles()[h].signed_area).sum::<f64>()
        })
        .sum()
}

#[test]
fn face_areas_sum_to_union_of_two_disks() {
    // Lens area for radii r1, r2 at distance d, closed form.
    let (r1, r2, d) = (1.0f64, 1.3f64, 1.7f64);
    let a1 = ((d * d + r1 * r1 - r2 * r2) / (2.0 * d * r1)).acos();
    let a2 = ((d * d + r2 * r2 - r1 * r1) / (2.0 * d * r2)).acos();
    let lens = r1 * r1 * (a1 - a1.sin() * a1.cos()) + r2 * r2 * (a2 - a2.sin() * a2.cos());
    let union = PI * (r1 * r1 + r2 * r2) - lens;

    let sub = build_subdivision(&arr(&[(0.0, 0.0, r1), (d, 0.0, r2)])).unwrap();
    assert!((bounded_area(&sub) - union).abs() < 1e-12);
    assert_eq!(sub.census().digon_count, 3);
}

#[test]
fn annulus_area() {
    let sub = build_subdivision(&arr(&[(0.0, 0.0, 3.0), (0.4, 0.2, 1.0)])).unwrap();
    assert!((bounded_area(&sub) - 9.0 * PI).abs() < 1e-12);
}

#[test]
fn side_counts_sum_to_twice_the_arcs() {
    for a in [make_b(2, 6).unwrap(), make_nonnested_b(3).unwrap(), make_random_nonnested(25, 4).unwrap()] {
        let sub = build_subdivision(&a).unwrap();
        assert!(sub.euler_holds());
        let total: usize = sub.faces().iter().map(|f| f.side_count).sum();
        assert_eq!(total, 2 * sub.arc_count());
    }
}

#[test]
fn vertices_are_twice_the_crossing_pairs() {
    let a = make_b(3, 7).unwrap();
    let sub = build_subdivision(&a).unwrap();
    assert_eq!(sub.vertex_count(), 2 * (4 * 3 * 7 - 2 * 7));
    // Every vertex has degree 4, so arcs are twice the vertices.
    assert_eq!(sub.arc_count(), 2 * sub.vertex_count());
}

#[test]
fn augmentation_adds_four_triangles_per_point() {
    let pair = arr(&[(0.0, 0.0, 1.0), (SQRT_2, 0.0, 1.0)]);
    let aug = augment_triangles(&pair).unwrap();
    let sub = build_subdivision(&aug).unwrap();
    assert!(sub.euler_holds());
    assert_eq!(sub.census().triangle_count, 8);
}

#[test]
fn coincident_points_are_reported() {
    // Three circles through a common point at the origin.
    let pts: Vec<(f64, f64, f64)> = (0..3)
        .map(|k| {
            let t = 2.0 * PI * k as f64 / 3.0;
            (t.cos(), t.sin(), 1.0)
        })
        .collect();
    match build_subdivision(&arr(&pts)) {
        Err(CellsError::NonGeneric { point, .. }) => assert!(point.norm() < 1e-9),
        other => panic!("expected a generic-position error, got {other:?}"),
    }
}
