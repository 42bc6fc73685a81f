//! Circle geometry: predicates, intersection points, angles and inversion.
//!
//! Every comparison goes through a [`Tolerance`] holding a relative epsilon.
//! Quantities are compared against their natural scale (squared radii for
//! orthogonality, radii for incidence), so all classifications are invariant
//! under uniform scaling of the input.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn from_polar(radius: f64, angle: f64) -> Self {
        Point::new(radius * angle.cos(), radius * angle.sin())
    }

    #[inline]
    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3d cross product.
    #[inline]
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    #[inline]
    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn distance(self, other: Point) -> f64 {
        (self - other).norm()
    }

    #[inline]
    pub fn distance_sq(self, other: Point) -> f64 {
        (self - other).norm_sq()
    }

    /// Counterclockwise rotation by a right angle.
    #[inline]
    pub fn perp(self) -> Point {
        Point::new(-self.y, self.x)
    }

    #[inline]
    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn lerp(self, other: Point, t: f64) -> Point {
        self + (other - self) * t
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, rhs: f64) -> Point {
        Point::new(self.x * rhs, self.y * rhs)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Opaque circle identifier, unique within an arrangement.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct CircleId(String);

impl CircleId {
    pub fn new(id: impl Into<String>) -> Self {
        CircleId(id.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for CircleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for CircleId {
    fn from(s: &str) -> Self {
        CircleId(s.to_owned())
    }
}

impl From<String> for CircleId {
    fn from(s: String) -> Self {
        CircleId(s)
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeomError {
    #[error("radius of circle {id} must be positive and finite, got {radius}")]
    InvalidRadius { id: CircleId, radius: f64 },
    #[error("center of circle {id} is not finite")]
    InvalidCenter { id: CircleId },
    #[error("circles {a} and {b} are tangent")]
    Tangency { a: CircleId, b: CircleId },
    #[error("inversion of {id} has no finite image")]
    DegenerateImage { id: CircleId },
    #[error("tolerance must lie in (0, 1e-3), got {0}")]
    InvalidTolerance(f64),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Circle {
    pub id: CircleId,
    pub center: Point,
    pub radius: f64,
}

impl Circle {
    pub fn new(id: impl Into<CircleId>, center: Point, radius: f64) -> Result<Self, GeomError> {
        let id = id.into();
        if !(radius.is_finite() && radius > 0.0) {
            return Err(GeomError::InvalidRadius { id, radius });
        }
        if !center.is_finite() {
            return Err(GeomError::InvalidCenter { id });
        }
        Ok(Circle { id, center, radius })
    }

    /// Point on the circle at the given polar angle around its center.
    pub fn point_at(&self, angle: f64) -> Point {
        self.center + Point::from_polar(self.radius, angle)
    }

    /// Unsigned distance from `p` to the circle boundary.
    pub fn boundary_distance(&self, p: Point) -> f64 {
        (p.distance(self.center) - self.radius).abs()
    }
}

/// Relative tolerance shared by every geometric comparison.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerance {
    rel_eps: f64,
}

impl Tolerance {
    pub const DEFAULT_REL_EPS: f64 = 1e-9;

    pub fn new(rel_eps: f64) -> Result<Self, GeomError> {
        if rel_eps > 0.0 && rel_eps < 1e-3 {
            Ok(Tolerance { rel_eps })
        } else {
            Err(GeomError::InvalidTolerance(rel_eps))
        }
    }

    #[inline]
    pub fn rel_eps(&self) -> f64 {
        self.rel_eps
    }

    /// `|a - b| <= rel_eps * scale`
    #[inline]
    pub fn close(&self, a: f64, b: f64, scale: f64) -> bool {
        (a - b).abs() <= self.rel_eps * scale
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { rel_eps: Self::DEFAULT_REL_EPS }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", content = "angle")]
pub enum PairRelation {
    DisjointOutside,
    NestedFirstInSecond,
    NestedSecondInFirst,
    Tangent,
    /// Intersection angle in the open interval (0, π).
    Crossing(f64),
}

impl PairRelation {
    pub fn is_crossing(&self) -> bool {
        matches!(self, PairRelation::Crossing(_))
    }

    pub fn is_nested(&self) -> bool {
        matches!(self, PairRelation::NestedFirstInSecond | PairRelation::NestedSecondInFirst)
    }

    /// Relation with the two arguments swapped.
    pub fn flipped(self) -> PairRelation {
        match self {
            PairRelation::NestedFirstInSecond => PairRelation::NestedSecondInFirst,
            PairRelation::NestedSecondInFirst => PairRelation::NestedFirstInSecond,
            other => other,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PointLocation {
    Inside,
    OnBoundary,
    Outside,
}

/// Law-of-cosines angle for a pair at center distance `d`; clamps the cosine.
fn crossing_angle(ra: f64, rb: f64, d: f64) -> f64 {
    let cos = ((ra * ra + rb * rb - d * d) / (2.0 * ra * rb)).clamp(-1.0, 1.0);
    PI - cos.acos()
}

pub fn relation(a: &Circle, b: &Circle, tol: Tolerance) -> PairRelation {
    let d = a.center.distance(b.center);
    let sum = a.radius + b.radius;
    let (r_max, r_min) = if a.radius >= b.radius {
        (a.radius, b.radius)
    } else {
        (b.radius, a.radius)
    };
    let eps = tol.rel_eps();

    if d > sum + eps * sum {
        return PairRelation::DisjointOutside;
    }
    if d >= sum - eps * sum {
        return PairRelation::Tangent;
    }
    if d + r_min < r_max - eps * r_max {
        // The smaller one is the inner one; equal radii cannot reach here.
        return if a.radius > b.radius {
            PairRelation::NestedSecondInFirst
        } else {
            PairRelation::NestedFirstInSecond
        };
    }
    if d + r_min <= r_max + eps * r_max {
        return PairRelation::Tangent;
    }
    PairRelation::Crossing(crossing_angle(a.radius, b.radius, d))
}

/// Orthogonality test: `|C_A C_B|² = r_A² + r_B²` up to tolerance, for a crossing pair.
pub fn orthogonal(a: &Circle, b: &Circle, tol: Tolerance) -> bool {
    if !relation(a, b, tol).is_crossing() {
        return false;
    }
    let d_sq = a.center.distance_sq(b.center);
    let r_sq = a.radius * a.radius + b.radius * b.radius;
    tol.close(d_sq, r_sq, r_sq)
}

/// `d² >= r_A² + r_B²` up to tolerance; the crossing angle is then at most π/2.
pub fn at_most_right_angle(a: &Circle, b: &Circle, tol: Tolerance) -> bool {
    let d_sq = a.center.distance_sq(b.center);
    let r_sq = a.radius * a.radius + b.radius * b.radius;
    d_sq - r_sq >= -tol.rel_eps() * r_sq
}

pub fn intersection_angle(a: &Circle, b: &Circle, tol: Tolerance) -> Option<f64> {
    match relation(a, b, tol) {
        PairRelation::Crossing(angle) => Some(angle),
        _ => None,
    }
}

/// Both intersection points of a crossing pair; the first lies to the left of
/// the directed line from `a`'s center to `b`'s center.
pub fn intersect_points(
    a: &Circle,
    b: &Circle,
    tol: Tolerance,
) -> Result<Option<[Point; 2]>, GeomError> {
    match relation(a, b, tol) {
        PairRelation::Tangent => Err(GeomError::Tangency { a: a.id.clone(), b: b.id.clone() }),
        PairRelation::Crossing(_) => Ok(Some(crossing_points(a, b))),
        _ => Ok(None),
    }
}

/// Intersection points assuming the pair is known to cross.
pub(crate) fn crossing_points(a: &Circle, b: &Circle) -> [Point; 2] {
    let delta = b.center - a.center;
    let d_sq = delta.norm_sq();
    let d = d_sq.sqrt();
    let u = delta * (1.0 / d);
    let along = (d_sq + a.radius * a.radius - b.radius * b.radius) / (2.0 * d);
    let h = (a.radius * a.radius - along * along).max(0.0).sqrt();
    let base = a.center + u * along;
    let n = u.perp();
    [base + n * h, base - n * h]
}

pub fn point_in_circle(p: Point, c: &Circle, tol: Tolerance) -> PointLocation {
    let dist = p.distance(c.center);
    if tol.close(dist, c.radius, c.radius) {
        PointLocation::OnBoundary
    } else if dist < c.radius {
        PointLocation::Inside
    } else {
        PointLocation::Outside
    }
}

/// Number of points where the closed segment `pq` meets the circle boundary.
///
/// A line tangent to the circle counts once.
pub fn segment_circle_intersections(p: Point, q: Point, c: &Circle, tol: Tolerance) -> usize {
    let dir = q - p;
    let len = dir.norm();
    if len == 0.0 {
        return usize::from(point_in_circle(p, c, tol) == PointLocation::OnBoundary);
    }
    let u = dir * (1.0 / len);
    // Signed position of the foot of the perpendicular from the center.
    let foot = (c.center - p).dot(u);
    let h = (c.center - p).cross(u).abs();
    let r = c.radius;
    let eps = tol.rel_eps();
    let within = |s: f64| s >= -eps * r && s <= len + eps * r;

    if h > r + eps * r {
        0
    } else if h >= r - eps * r {
        usize::from(within(foot))
    } else {
        let half = (r * r - h * h).sqrt();
        usize::from(within(foot - half)) + usize::from(within(foot + half))
    }
}

/// Straight line stored as the foot of the perpendicular from the origin plus
/// a unit direction with positive x (positive y on ties).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Line {
    pub id: CircleId,
    pub point: Point,
    pub direction: Point,
}

impl Line {
    pub fn new(id: impl Into<CircleId>, through: Point, direction: Point) -> Self {
        let len = direction.norm();
        let mut dir = direction * (1.0 / len);
        if dir.x < 0.0 || (dir.x == 0.0 && dir.y < 0.0) {
            dir = -dir;
        }
        let point = through - dir * through.dot(dir);
        Line { id: id.into(), point, direction: dir }
    }

    pub fn distance_to(&self, p: Point) -> f64 {
        (p - self.point).cross(self.direction).abs()
    }

    /// Closest point on the line to `p`.
    pub fn foot(&self, p: Point) -> Point {
        self.point + self.direction * (p - self.point).dot(self.direction)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum GeneralizedCircle {
    Circle(Circle),
    Line(Line),
}

impl GeneralizedCircle {
    pub fn id(&self) -> &CircleId {
        match self {
            GeneralizedCircle::Circle(c) => &c.id,
            GeneralizedCircle::Line(l) => &l.id,
        }
    }

    pub fn as_circle(&self) -> Option<&Circle> {
        match self {
            GeneralizedCircle::Circle(c) => Some(c),
            GeneralizedCircle::Line(_) => None,
        }
    }

    pub fn as_line(&self) -> Option<&Line> {
        match self {
            GeneralizedCircle::Line(l) => Some(l),
            GeneralizedCircle::Circle(_) => None,
        }
    }
}

impl From<Circle> for GeneralizedCircle {
    fn from(c: Circle) -> Self {
        GeneralizedCircle::Circle(c)
    }
}

/// Inversion `x ↦ o + R²(x − o)/|x − o|²` in `mirror`, applied to a circle or line.
pub fn invert(
    obj: &GeneralizedCircle,
    mirror: &Circle,
    tol: Tolerance,
) -> Result<GeneralizedCircle, GeomError> {
    let o = mirror.center;
    let r2 = mirror.radius * mirror.radius;
    let eps = tol.rel_eps();

    let image = match obj {
        GeneralizedCircle::Circle(c) => {
            let offset = c.center - o;
            let dist = offset.norm();
            if (dist - c.radius).abs() <= eps * c.radius {
                // Circle through the mirror center: image is the line
                // perpendicular to the center ray, at distance R²/(2r).
                let u = offset * (1.0 / dist);
                let through = o + u * (r2 / (2.0 * c.radius));
                GeneralizedCircle::Line(Line::new(c.id.clone(), through, u.perp()))
            } else {
                let s = r2 / (offset.norm_sq() - c.radius * c.radius);
                let center = o + offset * s;
                let radius = s.abs() * c.radius;
                match Circle::new(c.id.clone(), center, radius) {
                    Ok(img) => GeneralizedCircle::Circle(img),
                    Err(_) => return Err(GeomError::DegenerateImage { id: c.id.clone() }),
                }
            }
        }
        GeneralizedCircle::Line(l) => {
            let foot = l.foot(o);
            let delta = foot - o;
            let dist = delta.norm();
            if dist <= eps * mirror.radius {
                GeneralizedCircle::Line(Line::new(l.id.clone(), l.point, l.direction))
            } else {
                let center = o + delta * (r2 / (2.0 * dist * dist));
                let radius = r2 / (2.0 * dist);
                match Circle::new(l.id.clone(), center, radius) {
                    Ok(img) => GeneralizedCircle::Circle(img),
                    Err(_) => return Err(GeomError::DegenerateImage { id: l.id.clone() }),
                }
            }
        }
    };
    Ok(image)
}

/// Inverts a single point; `None` for the mirror center.
pub fn invert_point(p: Point, mirror: &Circle) -> Option<Point> {
    let offset = p - mirror.center;
    let d_sq = offset.norm_sq();
    if d_sq == 0.0 {
        return None;
    }
    Some(mirror.center + offset * (mirror.radius * mirror.radius / d_sq))
}

/// Acute angle between two line directions, in [0, π/2].
pub fn line_angle(a: &Line, b: &Line) -> f64 {
    let c = a.direction.dot(b.direction).abs().min(1.0);
    let ang = c.acos();
    ang.min(PI - ang).min(FRAC_PI_2)
}
