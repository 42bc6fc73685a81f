use std::f64::consts::TAU;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arrangement::Arrangement;
use crate::geom::{self, Circle, CircleId, PairRelation, Point, Tolerance};

use super::GeneratorError;

pub const MAX_CONSECUTIVE_REJECTIONS: usize = 1000;

/// Disjoint pairs must clear tangency by this relative margin, so that
/// generated instances are not borderline under the default tolerance.
const CLEARANCE: f64 = 1e-6;

fn random_id(k: usize) -> CircleId {
    CircleId::new(format!("R{k:04}"))
}

/// Center and radius of a circle orthogonal to `p`, centered at distance
/// `d > r_p` from it.
fn orthogonal_to_one(rng: &mut ChaCha8Rng, p: &Circle) -> (Point, f64) {
    let d = p.radius * rng.gen_range(1.05..2.5);
    let center = p.center + Point::from_polar(d, rng.gen_range(0.0..TAU));
    (center, (d * d - p.radius * p.radius).sqrt())
}

/// A circle orthogonal to both `p` and `q`: its center lies on their radical
/// axis, where the power with respect to either circle is the squared radius.
fn orthogonal_to_two(rng: &mut ChaCha8Rng, p: &Circle, q: &Circle) -> Option<(Point, f64)> {
    let axis = q.center - p.center;
    let dist = axis.norm();
    let u = axis * (1.0 / dist);
    let t0 = (dist * dist + p.radius * p.radius - q.radius * q.radius) / (2.0 * dist);
    let base_power = t0 * t0 - p.radius * p.radius;
    let r = p.radius.min(q.radius) * rng.gen_range(0.3..2.0);
    let offset_sq = r * r - base_power;
    if offset_sq < 0.0 {
        return None;
    }
    let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
    let center = p.center + u * t0 + u.perp() * (sign * offset_sq.sqrt());
    Some((center, r))
}

/// The circle centered at the radical center of three circles, when that
/// point lies outside all of them.
fn orthogonal_to_three(p: &Circle, q: &Circle, s: &Circle) -> Option<(Point, f64)> {
    // 2 (c_q - c_p) . x = |c_q|² - r_q² - |c_p|² + r_p², likewise for s.
    let row = |c: &Circle| {
        let d = c.center - p.center;
        let rhs = c.center.norm_sq() - c.radius * c.radius - p.center.norm_sq() + p.radius * p.radius;
        (2.0 * d.x, 2.0 * d.y, rhs)
    };
    let (a1, b1, c1) = row(q);
    let (a2, b2, c2) = row(s);
    let det = a1 * b2 - a2 * b1;
    let scale = (a1.abs() + b1.abs()) * (a2.abs() + b2.abs());
    if det.abs() <= 1e-9 * scale {
        return None;
    }
    let center = Point::new((c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det);
    let power = center.distance_sq(p.center) - p.radius * p.radius;
    (power > 0.0).then(|| (center, power.sqrt()))
}

fn admissible(candidate: &Circle, placed: &[Circle], tol: Tolerance) -> bool {
    placed.iter().all(|c| match geom::relation(candidate, c, tol) {
        PairRelation::DisjointOutside => {
            candidate.center.distance(c.center) > (candidate.radius + c.radius) * (1.0 + CLEARANCE)
        }
        PairRelation::Crossing(_) => geom::orthogonal(candidate, c, tol),
        _ => false,
    })
}

/// Grows a nonnested orthogonal arrangement one circle at a time. Each new
/// circle is made orthogonal to one, two or three existing circles and is
/// rejected unless it is disjoint from or orthogonal to every other circle.
pub fn make_random_nonnested(n: usize, seed: u64) -> Result<Arrangement, GeneratorError> {
    if n < 1 {
        return Err(GeneratorError::Domain { name: "n", value: 0.0, reason: "at least one circle is required" });
    }
    let tol = Tolerance::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut placed = vec![Circle::new(random_id(0), Point::ORIGIN, 1.0)?];
    let mut rejections = 0;
    while placed.len() < n {
        let k = placed.len();
        let roll: f64 = rng.gen();
        let proposal = if k >= 3 && roll < 0.2 {
            let pick = sample(&mut rng, k, 3);
            orthogonal_to_three(&placed[pick.index(0)], &placed[pick.index(1)], &placed[pick.index(2)])
        } else if k >= 2 && roll < 0.5 {
            let pick = sample(&mut rng, k, 2);
            orthogonal_to_two(&mut rng, &placed[pick.index(0)], &placed[pick.index(1)])
        } else {
            let parent = rng.gen_range(0..k);
            Some(orthogonal_to_one(&mut rng, &placed[parent]))
        };

        let accepted = proposal
            .and_then(|(center, r)| Circle::new(random_id(k), center, r).ok())
            .filter(|c| admissible(c, &placed, tol));
        match accepted {
            Some(c) => {
                placed.push(c);
                rejections = 0;
            }
            None => {
                rejections += 1;
                if rejections >= MAX_CONSECUTIVE_REJECTIONS {
                    return Err(GeneratorError::Generation { placed: k, rejections });
                }
            }
        }
    }
    Ok(Arrangement::new(placed, tol)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{is_nonnested, validate, ValidationMode};

    #[test]
    fn single_circle() {
        let arr = make_random_nonnested(1, 3).unwrap();
        assert_eq!(arr.len(), 1);
        assert!(validate(&arr, ValidationMode::Orthogonal).ok);
    }

    #[test]
    fn valid_and_deterministic() {
        for seed in 0..10 {
            let a = make_random_nonnested(30, seed).unwrap();
            assert_eq!(a.len(), 30);
            assert!(validate(&a, ValidationMode::Orthogonal).ok);
            assert!(is_nonnested(&a));
            assert_eq!(a, make_random_nonnested(30, seed).unwrap());
        }
    }

    #[test]
    fn three_parent_move_is_orthogonal_to_all() {
        let tol = Tolerance::default();
        let cs = [
            Circle::new("p", Point::new(0.0, 0.0), 1.0).unwrap(),
            Circle::new("q", Point::new(4.0, 0.0), 1.5).unwrap(),
            Circle::new("s", Point::new(1.0, 5.0), 0.5).unwrap(),
        ];
        let (center, r) = orthogonal_to_three(&cs[0], &cs[1], &cs[2]).unwrap();
        let c = Circle::new("c", center, r).unwrap();
        for other in &cs {
            assert!(geom::orthogonal(&c, other, tol));
        }
    }
}
