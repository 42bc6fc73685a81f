//! Planar subdivision of an arrangement into intersection points, circular
//! arcs and faces, and the census of faces by number of bounding arcs.

use std::collections::BTreeMap;
use std::f64::consts::TAU;

use serde::Serialize;
use thiserror::Error;

use crate::arrangement::Arrangement;
use crate::geom::{self, CircleId, GeomError, PairRelation, Point};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CellsError {
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error("intersection points of ({a1}, {a2}) and ({b1}, {b2}) coincide near {point}")]
    NonGeneric { a1: CircleId, a2: CircleId, b1: CircleId, b2: CircleId, point: Point },
    #[error("inconsistent subdivision: {0}")]
    Inconsistent(String),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SubdivisionVertex {
    pub point: Point,
    /// Indices of the two circles through this point.
    pub circles: (usize, usize),
}

/// Directed arc. Vertex-free circles carry a single closed loop per direction.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HalfEdge {
    pub circle: usize,
    pub origin: Option<usize>,
    pub target: Option<usize>,
    pub ccw: bool,
    /// Polar angle (around the circle center) where the arc starts.
    pub start_angle: f64,
    /// Signed angular extent; positive for counterclockwise arcs.
    pub sweep: f64,
    pub twin: usize,
    pub next: usize,
    pub cycle: usize,
}

/// Closed boundary walk. Positive area: a bounded face lies on its left.
/// Negative area: the outer boundary of one connected component.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundaryCycle {
    pub half_edges: Vec<usize>,
    pub signed_area: f64,
    pub component: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Face {
    /// `None` for the unbounded face.
    pub outer: Option<usize>,
    /// Outer-boundary cycles of components nested in this face.
    pub holes: Vec<usize>,
    /// Arcs on the outer cycle plus all hole cycles.
    pub side_count: usize,
}

impl Face {
    pub fn is_bounded(&self) -> bool {
        self.outer.is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ArcSubdivision {
    vertices: Vec<SubdivisionVertex>,
    half_edges: Vec<HalfEdge>,
    cycles: Vec<BoundaryCycle>,
    /// `faces[0]` is the unbounded face.
    faces: Vec<Face>,
    components: usize,
    loops: usize,
}

impl ArcSubdivision {
    pub fn vertices(&self) -> &[SubdivisionVertex] {
        &self.vertices
    }

    pub fn half_edges(&self) -> &[HalfEdge] {
        &self.half_edges
    }

    pub fn cycles(&self) -> &[BoundaryCycle] {
        &self.cycles
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn unbounded_face(&self) -> &Face {
        &self.faces[0]
    }

    pub fn bounded_faces(&self) -> impl Iterator<Item = &Face> {
        self.faces[1..].iter()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arc_count(&self) -> usize {
        self.half_edges.len() / 2
    }

    /// Including the unbounded face.
    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn component_count(&self) -> usize {
        self.components
    }

    /// Circles without intersection points.
    pub fn loop_count(&self) -> usize {
        self.loops
    }

    /// `V − E + F = 1 + C`, with every vertex-free circle contributing one
    /// virtual vertex so that it forms a proper one-edge cycle.
    pub fn euler_holds(&self) -> bool {
        let lhs = (self.vertex_count() + self.loops + self.face_count()) as i64 - self.arc_count() as i64;
        lhs == 1 + self.components as i64
    }

    pub fn census(&self) -> FaceCensus {
        face_census(self)
    }
}

fn arc_area(center: Point, radius: f64, start: f64, sweep: f64) -> f64 {
    let end = start + sweep;
    0.5 * (radius * radius * sweep
        + radius * (center.x * (end.sin() - start.sin()) - center.y * (end.cos() - start.cos())))
}

/// Whether polar angle `phi` lies on the half-open arc `[start, start + sweep)`.
fn on_arc(phi: f64, start: f64, sweep: f64) -> bool {
    if sweep >= 0.0 {
        (phi - start).rem_euclid(TAU) < sweep
    } else {
        (start - phi).rem_euclid(TAU) < -sweep
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut cur = x;
        while self.0[cur] != root {
            let next = self.0[cur];
            self.0[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

pub fn build_subdivision(arr: &Arrangement) -> Result<ArcSubdivision, CellsError> {
    let n = arr.len();
    let circles = arr.circles();
    let eps = arr.tol().rel_eps();

    // Vertices.
    let mut vertices = Vec::new();
    let mut uf = UnionFind::new(n);
    for (i, j) in arr.pairs() {
        match arr.relation(i, j) {
            PairRelation::Tangent => {
                return Err(GeomError::Tangency { a: circles[i].id.clone(), b: circles[j].id.clone() }.into())
            }
            PairRelation::Crossing(_) => {
                for point in geom::crossing_points(&circles[i], &circles[j]) {
                    vertices.push(SubdivisionVertex { point, circles: (i, j) });
                }
                uf.union(i, j);
            }
            _ => {}
        }
    }
    check_generic(arr, &vertices, 10.0 * eps)?;

    // Arcs, ordered around each circle.
    let mut on_circle: Vec<Vec<(f64, usize)>> = vec![Vec::new(); n];
    for (v, vx) in vertices.iter().enumerate() {
        for c in [vx.circles.0, vx.circles.1] {
            on_circle[c].push(((vx.point - circles[c].center).angle(), v));
        }
    }
    let mut half_edges: Vec<HalfEdge> = Vec::new();
    let mut loops = 0;
    for (c, list) in on_circle.iter_mut().enumerate() {
        list.sort_by(|a, b| a.0.total_cmp(&b.0));
        if list.is_empty() {
            loops += 1;
            let h = half_edges.len();
            half_edges.push(HalfEdge {
                circle: c, origin: None, target: None, ccw: true,
                start_angle: 0.0, sweep: TAU, twin: h + 1, next: h, cycle: 0,
            });
            half_edges.push(HalfEdge {
                circle: c, origin: None, target: None, ccw: false,
                start_angle: 0.0, sweep: -TAU, twin: h, next: h + 1, cycle: 0,
            });
            continue;
        }
        let k = list.len();
        for t in 0..k {
            let (a0, v0) = list[t];
            let (a1, v1) = list[(t + 1) % k];
            let mut sweep = (a1 - a0).rem_euclid(TAU);
            if k == 1 {
                sweep = TAU;
            }
            let h = half_edges.len();
            half_edges.push(HalfEdge {
                circle: c, origin: Some(v0), target: Some(v1), ccw: true,
                start_angle: a0, sweep, twin: h + 1, next: usize::MAX, cycle: 0,
            });
            half_edges.push(HalfEdge {
                circle: c, origin: Some(v1), target: Some(v0), ccw: false,
                start_angle: a1, sweep: -sweep, twin: h, next: usize::MAX, cycle: 0,
            });
        }
    }

    // Rotation system: outgoing arcs sorted by tangent direction.
    let mut outgoing: Vec<Vec<(f64, usize)>> = vec![Vec::new(); vertices.len()];
    for (h, he) in half_edges.iter().enumerate() {
        if let Some(v) = he.origin {
            let radial = Point::from_polar(1.0, he.start_angle);
            let tangent = if he.ccw { radial.perp() } else { -radial.perp() };
            outgoing[v].push((tangent.angle(), h));
        }
    }
    let mut position = vec![0usize; half_edges.len()];
    for list in &mut outgoing {
        list.sort_by(|a, b| a.0.total_cmp(&b.0));
        for (p, &(_, h)) in list.iter().enumerate() {
            position[h] = p;
        }
    }
    for he in half_edges.iter_mut() {
        let Some(v) = he.target else { continue };
        let list = &outgoing[v];
        let p = position[he.twin];
        // Clockwise neighbor of the twin keeps the face on the left.
        he.next = list[(p + list.len() - 1) % list.len()].1;
    }

    // Boundary cycles.
    let mut cycles = Vec::new();
    let mut seen = vec![false; half_edges.len()];
    for start in 0..half_edges.len() {
        if seen[start] {
            continue;
        }
        let mut walk = Vec::new();
        let mut h = start;
        let mut area = 0.0;
        while !seen[h] {
            seen[h] = true;
            walk.push(h);
            let he = &half_edges[h];
            let circle = &circles[he.circle];
            area += arc_area(circle.center, circle.radius, he.start_angle, he.sweep);
            h = he.next;
        }
        if h != start {
            return Err(CellsError::Inconsistent(format!("half-edge walk from {start} does not close")));
        }
        let component = uf.find(half_edges[start].circle);
        for &x in &walk {
            half_edges[x].cycle = cycles.len();
        }
        cycles.push(BoundaryCycle { half_edges: walk, signed_area: area, component });
    }

    let mut roots: Vec<usize> = (0..n).map(|c| uf.find(c)).collect();
    roots.sort_unstable();
    roots.dedup();
    let components = roots.len();
    let outer_cycles: Vec<usize> = (0..cycles.len()).filter(|&k| cycles[k].signed_area < 0.0).collect();
    if outer_cycles.len() != components {
        return Err(CellsError::Inconsistent(format!(
            "{} negative cycles for {components} components",
            outer_cycles.len()
        )));
    }

    // Faces: one per positive cycle plus the unbounded face.
    let mut faces = vec![Face { outer: None, holes: Vec::new(), side_count: 0 }];
    let mut face_of_cycle = vec![usize::MAX; cycles.len()];
    for (k, cyc) in cycles.iter().enumerate() {
        if cyc.signed_area > 0.0 {
            face_of_cycle[k] = faces.len();
            faces.push(Face { outer: Some(k), holes: Vec::new(), side_count: cyc.half_edges.len() });
        }
    }
    for &hole in &outer_cycles {
        let probe = {
            let he = &half_edges[cycles[hole].half_edges[0]];
            circles[he.circle].point_at(he.start_angle + 0.5 * he.sweep)
        };
        let component = cycles[hole].component;
        let host = cycles
            .iter()
            .enumerate()
            .filter(|(_, c)| c.signed_area > 0.0 && c.component != component)
            .filter(|(_, c)| winding_number(arr, &half_edges, c, probe) != 0)
            .min_by(|a, b| a.1.signed_area.total_cmp(&b.1.signed_area))
            .map(|(k, _)| face_of_cycle[k])
            .unwrap_or(0);
        faces[host].holes.push(hole);
        faces[host].side_count += cycles[hole].half_edges.len();
    }

    Ok(ArcSubdivision { vertices, half_edges, cycles, faces, components, loops })
}

/// Ray cast towards +x against the arcs of one cycle.
fn winding_number(arr: &Arrangement, half_edges: &[HalfEdge], cycle: &BoundaryCycle, p: Point) -> i32 {
    let mut wn = 0;
    for &h in &cycle.half_edges {
        let he = &half_edges[h];
        let c = arr.circle(he.circle);
        let dy = p.y - c.center.y;
        if dy.abs() >= c.radius {
            continue;
        }
        let dx = (c.radius * c.radius - dy * dy).sqrt();
        for x in [c.center.x - dx, c.center.x + dx] {
            if x <= p.x {
                continue;
            }
            let phi = dy.atan2(x - c.center.x);
            if on_arc(phi, he.start_angle, he.sweep) {
                // Upward motion (counterclockwise on the right half) counts +1.
                let upward = (x - c.center.x) * he.sweep > 0.0;
                wn += if upward { 1 } else { -1 };
            }
        }
    }
    wn
}

fn check_generic(arr: &Arrangement, vertices: &[SubdivisionVertex], factor: f64) -> Result<(), CellsError> {
    let circles = arr.circles();
    let scale = |v: &SubdivisionVertex| circles[v.circles.0].radius.max(circles[v.circles.1].radius);
    let max_gap = vertices.iter().map(|v| factor * scale(v)).fold(0.0, f64::max);
    let mut order: Vec<usize> = (0..vertices.len()).collect();
    order.sort_by(|&a, &b| vertices[a].point.x.total_cmp(&vertices[b].point.x));
    for (k, &a) in order.iter().enumerate() {
        let va = &vertices[a];
        for &b in &order[k + 1..] {
            let vb = &vertices[b];
            if vb.point.x - va.point.x > max_gap {
                break;
            }
            if va.point.distance(vb.point) <= factor * scale(va).max(scale(vb)) {
                return Err(CellsError::NonGeneric {
                    a1: circles[va.circles.0].id.clone(),
                    a2: circles[va.circles.1].id.clone(),
                    b1: circles[vb.circles.0].id.clone(),
                    b2: circles[vb.circles.1].id.clone(),
                    point: va.point,
                });
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceCensus {
    /// side count → number of bounded faces with that many arcs.
    pub by_sides: BTreeMap<usize, usize>,
    pub total_bounded: usize,
    pub digon_count: usize,
    pub triangle_count: usize,
}

/// Buckets bounded faces by their number of bounding arcs.
pub fn face_census(sub: &ArcSubdivision) -> FaceCensus {
    let mut by_sides = BTreeMap::new();
    for face in sub.bounded_faces() {
        *by_sides.entry(face.side_count).or_insert(0) += 1;
    }
    FaceCensus {
        total_bounded: sub.faces.len() - 1,
        digon_count: by_sides.get(&2).copied().unwrap_or(0),
        triangle_count: by_sides.get(&3).copied().unwrap_or(0),
        by_sides,
    }
}
