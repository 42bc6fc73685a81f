//! Arrangement container, validation, nesting structure and depth.

use std::collections::HashSet;

use serde::Serialize;
use thiserror::Error;

use crate::geom::{self, Circle, CircleId, GeomError, PairRelation, Tolerance};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ArrangementError {
    #[error("duplicate circle id {0}")]
    DuplicateId(CircleId),
    #[error("circles {a} and {b} coincide")]
    DuplicateCircle { a: CircleId, b: CircleId },
    #[error(transparent)]
    Geom(#[from] GeomError),
}

/// A finite set of circles sharing one tolerance policy.
#[derive(Debug, Clone, PartialEq)]
pub struct Arrangement {
    circles: Vec<Circle>,
    tol: Tolerance,
}

impl Arrangement {
    /// Checks id uniqueness and rejects coincident circles. Tangent pairs are
    /// accepted here so that [`validate`] can name them; use
    /// [`Arrangement::new_strict`] to reject them up front.
    pub fn new(circles: Vec<Circle>, tol: Tolerance) -> Result<Self, ArrangementError> {
        let mut seen = HashSet::with_capacity(circles.len());
        for c in &circles {
            if !seen.insert(&c.id) {
                return Err(ArrangementError::DuplicateId(c.id.clone()));
            }
        }
        let eps = tol.rel_eps();
        for (i, a) in circles.iter().enumerate() {
            for b in &circles[i + 1..] {
                let scale = a.radius.max(b.radius);
                if a.center.distance(b.center) <= eps * scale
                    && (a.radius - b.radius).abs() <= eps * scale
                {
                    return Err(ArrangementError::DuplicateCircle {
                        a: a.id.clone(),
                        b: b.id.clone(),
                    });
                }
            }
        }
        Ok(Arrangement { circles, tol })
    }

    /// Like [`Arrangement::new`] but also rejects tangent pairs.
    pub fn new_strict(circles: Vec<Circle>, tol: Tolerance) -> Result<Self, ArrangementError> {
        let arr = Self::new(circles, tol)?;
        for (i, j) in arr.pairs() {
            if arr.relation(i, j) == PairRelation::Tangent {
                return Err(GeomError::Tangency {
                    a: arr.circles[i].id.clone(),
                    b: arr.circles[j].id.clone(),
                }
                .into());
            }
        }
        Ok(arr)
    }

    pub fn empty(tol: Tolerance) -> Self {
        Arrangement { circles: Vec::new(), tol }
    }

    pub fn circles(&self) -> &[Circle] {
        &self.circles
    }

    pub fn circle(&self, index: usize) -> &Circle {
        &self.circles[index]
    }

    pub fn into_circles(self) -> Vec<Circle> {
        self.circles
    }

    pub fn len(&self) -> usize {
        self.circles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circles.is_empty()
    }

    pub fn tol(&self) -> Tolerance {
        self.tol
    }

    pub fn index_of(&self, id: &CircleId) -> Option<usize> {
        self.circles.iter().position(|c| &c.id == id)
    }

    pub fn get(&self, id: &CircleId) -> Option<&Circle> {
        self.circles.iter().find(|c| &c.id == id)
    }

    /// Relation between circles `i` and `j`, from `i`'s point of view.
    pub fn relation(&self, i: usize, j: usize) -> PairRelation {
        geom::relation(&self.circles[i], &self.circles[j], self.tol)
    }

    /// All index pairs `(i, j)` with `i < j`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.circles.len();
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
    }

    pub fn relations(&self) -> RelationTable {
        RelationTable::new(self)
    }

    /// A copy with one more circle appended.
    pub fn with_circle(&self, circle: Circle) -> Result<Self, ArrangementError> {
        let mut circles = self.circles.clone();
        circles.push(circle);
        Self::new(circles, self.tol)
    }

    /// Applies `f` to every circle; used for rigid motions and scalings.
    pub fn map_circles(
        &self,
        mut f: impl FnMut(&Circle) -> Circle,
    ) -> Result<Self, ArrangementError> {
        Self::new(self.circles.iter().map(&mut f).collect(), self.tol)
    }

    /// Same circles under a different tolerance.
    pub fn with_tolerance(&self, tol: Tolerance) -> Self {
        Arrangement { circles: self.circles.clone(), tol }
    }
}

/// Dense n×n table of pair relations, computed once.
#[derive(Debug, Clone)]
pub struct RelationTable {
    n: usize,
    table: Vec<PairRelation>,
}

impl RelationTable {
    fn new(arr: &Arrangement) -> Self {
        let n = arr.len();
        let mut table = vec![PairRelation::DisjointOutside; n * n];
        for (i, j) in arr.pairs() {
            let rel = arr.relation(i, j);
            table[i * n + j] = rel;
            table[j * n + i] = rel.flipped();
        }
        RelationTable { n, table }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Meaningless on the diagonal.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> PairRelation {
        self.table[i * self.n + j]
    }

    #[inline]
    pub fn crossing(&self, i: usize, j: usize) -> bool {
        i != j && self.get(i, j).is_crossing()
    }

    /// Circle `i` properly contains circle `j`.
    #[inline]
    pub fn contains(&self, i: usize, j: usize) -> bool {
        i != j && self.get(i, j) == PairRelation::NestedSecondInFirst
    }

    pub fn crossing_neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&j| self.crossing(i, j))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ValidationMode {
    Orthogonal,
    Acute,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind")]
pub enum Observed {
    Tangent,
    Crossing { angle: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub a: CircleId,
    pub b: CircleId,
    pub observed: Observed,
    pub expected: &'static str,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationReport {
    pub mode: ValidationMode,
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.ok
    }
}

pub fn validate(arr: &Arrangement, mode: ValidationMode) -> ValidationReport {
    let tol = arr.tol();
    let mut violations = Vec::new();
    for (i, j) in arr.pairs() {
        let (a, b) = (arr.circle(i), arr.circle(j));
        match arr.relation(i, j) {
            PairRelation::Tangent => violations.push(Violation {
                a: a.id.clone(),
                b: b.id.clone(),
                observed: Observed::Tangent,
                expected: "circles must not touch",
            }),
            PairRelation::Crossing(angle) => {
                let (ok, expected) = match mode {
                    ValidationMode::Orthogonal => {
                        (geom::orthogonal(a, b, tol), "crossing angle equal to pi/2")
                    }
                    ValidationMode::Acute => {
                        (geom::at_most_right_angle(a, b, tol), "crossing angle at most pi/2")
                    }
                };
                if !ok {
                    violations.push(Violation {
                        a: a.id.clone(),
                        b: b.id.clone(),
                        observed: Observed::Crossing { angle },
                        expected,
                    });
                }
            }
            _ => {}
        }
    }
    ValidationReport { mode, ok: violations.is_empty(), violations }
}

/// Depth of every circle, in arrangement order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DepthLabeling {
    ids: Vec<CircleId>,
    depths: Vec<usize>,
}

impl DepthLabeling {
    pub fn depth(&self, index: usize) -> usize {
        self.depths[index]
    }

    pub fn get(&self, id: &CircleId) -> Option<usize> {
        self.ids.iter().position(|x| x == id).map(|i| self.depths[i])
    }

    pub fn depths(&self) -> &[usize] {
        &self.depths
    }

    pub fn is_shallow(&self, index: usize) -> bool {
        self.depths[index] == 0
    }

    pub fn is_deep(&self, index: usize) -> bool {
        self.depths[index] > 0
    }

    pub fn max_depth(&self) -> usize {
        self.depths.iter().copied().max().unwrap_or(0)
    }

    /// `histogram[k]` = number of circles with depth `k`.
    pub fn histogram(&self) -> Vec<usize> {
        let mut hist = vec![0; self.max_depth() + 1];
        if self.depths.is_empty() {
            return Vec::new();
        }
        for &d in &self.depths {
            hist[d] += 1;
        }
        hist
    }
}

/// Longest chain of properly nested circles inside each circle.
///
/// Proper containment implies a strictly larger radius, so processing circles
/// by increasing radius is a topological order of the containment relation.
pub fn depth_labeling(arr: &Arrangement) -> DepthLabeling {
    let rel = arr.relations();
    let n = arr.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| arr.circle(i).radius.total_cmp(&arr.circle(j).radius));

    let mut depths = vec![0usize; n];
    for (pos, &outer) in order.iter().enumerate() {
        let mut best = 0;
        for &inner in &order[..pos] {
            if rel.contains(outer, inner) {
                best = best.max(depths[inner] + 1);
            }
        }
        depths[outer] = best;
    }
    DepthLabeling { ids: arr.circles().iter().map(|c| c.id.clone()).collect(), depths }
}

pub fn is_nonnested(arr: &Arrangement) -> bool {
    arr.pairs().all(|(i, j)| !arr.relation(i, j).is_nested())
}
