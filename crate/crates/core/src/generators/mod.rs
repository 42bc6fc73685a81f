//! Explicit and random arrangements: wheels, nested wheel stacks, their
//! nonnested variant, triangle augmentation, acute perturbation.

mod augment;
mod perturb;
mod random;

pub use augment::augment_triangles;
pub use perturb::{perturb_acute, shrink_radii, Perturbation, MAX_PERTURB_ATTEMPTS};
pub use random::{make_random_nonnested, MAX_CONSECUTIVE_REJECTIONS};

use std::f64::consts::{PI, SQRT_2, TAU};

use serde::Serialize;
use thiserror::Error;

use crate::arrangement::{Arrangement, ArrangementError};
use crate::geom::{Circle, CircleId, GeomError, Point, Tolerance};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeneratorError {
    #[error("invalid parameter {name} = {value}: {reason}")]
    Domain { name: &'static str, value: f64, reason: &'static str },
    #[error("input arrangement is not orthogonal")]
    NotOrthogonal,
    #[error("could not isolate a small circle at the intersection of {a} and {b} near {point}")]
    Augmentation { a: CircleId, b: CircleId, point: Point },
    #[error("no admissible perturbation after {attempts} attempts")]
    Perturbation { attempts: usize },
    #[error("placement failed after {rejections} consecutive rejections ({placed} circles placed)")]
    Generation { placed: usize, rejections: usize },
    #[error("expected {expected} shrink factors, got {got}")]
    FactorCount { expected: usize, got: usize },
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
    #[error(transparent)]
    Geom(#[from] GeomError),
}

/// A point in polar coordinates around the origin.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Polar {
    pub radius: f64,
    pub angle: f64,
}

impl Polar {
    pub fn to_point(self) -> Point {
        Point::from_polar(self.radius, self.angle)
    }
}

/// Constants of the nested-wheel construction. Wheel `i` (1-based) is stored
/// at index `i - 1`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BParameters {
    pub a: usize,
    pub x: usize,
    pub alpha: f64,
    pub orbit_radii: Vec<f64>,
    pub satellite_radii: Vec<f64>,
    pub hub_radii: Vec<f64>,
    /// `centers[i][j]`: satellite `j` (1-based, index `j - 1`) of wheel `i`.
    pub centers: Vec<Vec<Polar>>,
}

fn check_sizes(x: usize, a: usize) -> Result<(), GeneratorError> {
    if a < 5 {
        return Err(GeneratorError::Domain {
            name: "a",
            value: a as f64,
            reason: "at least 5 satellites per wheel are required",
        });
    }
    if x < 1 {
        return Err(GeneratorError::Domain { name: "x", value: x as f64, reason: "at least one wheel is required" });
    }
    Ok(())
}

/// Growth ratio between consecutive wheels.
pub fn growth_ratio(a: usize) -> f64 {
    let t = PI / a as f64;
    (((2.0 * t).cos() - (4.0 * t).cos()).sqrt() + SQRT_2 * t.cos()) / (SQRT_2 * (2.0 * t).cos())
}

pub fn eval_b_parameters(x: usize, a: usize) -> Result<BParameters, GeneratorError> {
    check_sizes(x, a)?;
    let t = PI / a as f64;
    let alpha = growth_ratio(a);
    let d1 = 1.0 / (SQRT_2 * t.sin());
    let h1 = (1.0 / (2.0 * t.sin().powi(2)) - 1.0).sqrt();

    // Neighboring satellites of the innermost wheel sit at distance √2.
    let chord_sq = 2.0 * d1 * d1 * (1.0 - (2.0 * t).cos());
    if (chord_sq - 2.0).abs() > 1e-12 {
        return Err(GeneratorError::Domain { name: "a", value: a as f64, reason: "satellite spacing identity fails" });
    }

    let mut orbit_radii = Vec::with_capacity(x);
    let mut satellite_radii = Vec::with_capacity(x);
    let mut hub_radii = Vec::with_capacity(x);
    let mut centers = Vec::with_capacity(x);
    for i in 1..=x {
        let scale = alpha.powi(i as i32 - 1);
        let d = d1 * scale;
        orbit_radii.push(d);
        satellite_radii.push(scale);
        hub_radii.push(h1 * scale);
        let offset = if i % 2 == 1 { t } else { 0.0 };
        centers.push(
            (1..=a)
                .map(|j| Polar { radius: d, angle: TAU * j as f64 / a as f64 + offset })
                .collect(),
        );
    }
    Ok(BParameters { a, x, alpha, orbit_radii, satellite_radii, hub_radii, centers })
}

pub fn satellite_id(wheel: usize, j: usize) -> CircleId {
    CircleId::new(format!("S{wheel:02}.{j:02}"))
}

pub fn hub_id(wheel: usize) -> CircleId {
    CircleId::new(format!("H{wheel:02}"))
}

/// One wheel: `a` unit-spaced satellites around a hub, scaled by `scale` and
/// rotated by `rotation` about the origin.
pub fn make_wheel(a: usize, scale: f64, rotation: f64) -> Result<Arrangement, GeneratorError> {
    if !(scale > 0.0 && scale.is_finite()) {
        return Err(GeneratorError::Domain { name: "scale", value: scale, reason: "must be positive and finite" });
    }
    if !rotation.is_finite() {
        return Err(GeneratorError::Domain { name: "rotation", value: rotation, reason: "must be finite" });
    }
    let p = eval_b_parameters(1, a)?;
    let mut circles = Vec::with_capacity(a + 1);
    for j in 1..=a {
        let center = Point::from_polar(p.orbit_radii[0] * scale, TAU * j as f64 / a as f64 + rotation);
        circles.push(Circle::new(satellite_id(1, j), center, scale)?);
    }
    circles.push(Circle::new(hub_id(1), Point::ORIGIN, p.hub_radii[0] * scale)?);
    Ok(Arrangement::new(circles, Tolerance::default())?)
}

fn wheels(p: &BParameters, keep_hub: impl Fn(usize) -> bool) -> Result<Arrangement, GeneratorError> {
    let mut circles = Vec::new();
    for i in 1..=p.x {
        for (k, c) in p.centers[i - 1].iter().enumerate() {
            circles.push(Circle::new(satellite_id(i, k + 1), c.to_point(), p.satellite_radii[i - 1])?);
        }
        if keep_hub(i) {
            circles.push(Circle::new(hub_id(i), Point::ORIGIN, p.hub_radii[i - 1])?);
        }
    }
    Ok(Arrangement::new(circles, Tolerance::default())?)
}

/// `x` nested wheels of `a` satellites each.
pub fn make_b(x: usize, a: usize) -> Result<Arrangement, GeneratorError> {
    wheels(&eval_b_parameters(x, a)?, |_| true)
}

/// Five-satellite wheels with only the innermost hub kept.
pub fn make_nonnested_b(x: usize) -> Result<Arrangement, GeneratorError> {
    wheels(&eval_b_parameters(x, 5)?, |i| i == 1)
}
