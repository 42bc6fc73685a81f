use crate::arrangement::{validate, Arrangement, ValidationMode};
use crate::geom::{self, Circle, CircleId, GeneralizedCircle, PairRelation};

use super::GeneratorError;

/// Smallest admissible pre-image radius, relative to the larger crossing circle.
const RADIUS_FLOOR: f64 = 1e3;

fn small_id(k: usize) -> CircleId {
    CircleId::new(format!("T{k:04}"))
}

/// Adds a small circle over every intersection point, orthogonal to the two
/// circles through it and crossing nothing else.
///
/// The small circle is built in the picture inverted at the other
/// intersection point of the pair, where both circles become perpendicular
/// lines through the point itself; a circle centered there is orthogonal to
/// both lines, and inversion preserves that.
pub fn augment_triangles(arr: &Arrangement) -> Result<Arrangement, GeneratorError> {
    if !validate(arr, ValidationMode::Orthogonal).ok {
        return Err(GeneratorError::NotOrthogonal);
    }
    let tol = arr.tol();
    let eps = tol.rel_eps();
    let mut circles: Vec<Circle> = arr.circles().to_vec();
    let base = arr.len();

    for (i, j) in arr.pairs() {
        if !arr.relation(i, j).is_crossing() {
            continue;
        }
        let (a, b) = (arr.circle(i).clone(), arr.circle(j).clone());
        let pts = geom::crossing_points(&a, &b);
        for (p, other) in [(pts[0], pts[1]), (pts[1], pts[0])] {
            let span = p.distance(other);
            let mirror = Circle::new("mirror", other, span)?;
            let clearance = circles
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i && k != j)
                .map(|(_, c)| c.boundary_distance(p))
                .fold(f64::INFINITY, f64::min);
            let id = small_id(circles.len() - base + 1);
            let floor = RADIUS_FLOOR * eps * a.radius.max(b.radius);

            let mut rho = (clearance / 4.0).min(span / 4.0);
            let placed = loop {
                if rho < floor {
                    return Err(GeneratorError::Augmentation { a: a.id.clone(), b: b.id.clone(), point: p });
                }
                let seed = GeneralizedCircle::Circle(Circle::new(id.clone(), p, rho)?);
                if let GeneralizedCircle::Circle(small) = geom::invert(&seed, &mirror, tol)? {
                    if isolated(&small, &circles, i, j, &a, &b, tol) {
                        break small;
                    }
                }
                rho /= 2.0;
            };
            circles.push(placed);
        }
    }
    Ok(Arrangement::new(circles, tol)?)
}

fn isolated(
    small: &Circle,
    circles: &[Circle],
    i: usize,
    j: usize,
    a: &Circle,
    b: &Circle,
    tol: geom::Tolerance,
) -> bool {
    if !geom::orthogonal(small, a, tol) || !geom::orthogonal(small, b, tol) {
        return false;
    }
    circles
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != i && k != j)
        .all(|(_, c)| {
            matches!(
                geom::relation(small, c, tol),
                PairRelation::DisjointOutside | PairRelation::NestedFirstInSecond
            )
        })
}
