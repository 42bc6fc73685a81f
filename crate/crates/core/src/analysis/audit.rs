use std::f64::consts::TAU;

use serde::Serialize;

use super::{classify, AnalysisError, Classification};
use crate::arrangement::{depth_labeling, is_nonnested, validate, Arrangement, DepthLabeling, RelationTable, ValidationMode};
use crate::geom::{self, CircleId, Point, PointLocation};
use crate::graph::{build_graph, IntersectionGraph};

/// Sample points per center triangle in the coverage check.
pub const COVERAGE_SAMPLES: usize = 1000;
/// Extra evenly spaced boundary samples per circle in the segment check.
const RING_SAMPLES: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AuditCheck {
    CenterContainment,
    CenterSegmentClearance,
    DeepGreen,
    EightBoundary,
    GreenIntersectionBudget,
    IncidenceBound,
    NestedPairNeighbors,
    OneIntersectionPoint,
    RedSelection,
    SamePointNesting,
    SegmentToBoundary,
    SmallBlackCap,
    TriangleCoverage,
}

impl AuditCheck {
    pub const ALL: [AuditCheck; 13] = [
        AuditCheck::CenterContainment,
        AuditCheck::CenterSegmentClearance,
        AuditCheck::DeepGreen,
        AuditCheck::EightBoundary,
        AuditCheck::GreenIntersectionBudget,
        AuditCheck::IncidenceBound,
        AuditCheck::NestedPairNeighbors,
        AuditCheck::OneIntersectionPoint,
        AuditCheck::RedSelection,
        AuditCheck::SamePointNesting,
        AuditCheck::SegmentToBoundary,
        AuditCheck::SmallBlackCap,
        AuditCheck::TriangleCoverage,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            AuditCheck::CenterContainment => "center-containment",
            AuditCheck::CenterSegmentClearance => "center-segment-clearance",
            AuditCheck::DeepGreen => "deep-green",
            AuditCheck::EightBoundary => "eight-boundary",
            AuditCheck::GreenIntersectionBudget => "green-intersection-budget",
            AuditCheck::IncidenceBound => "incidence-bound",
            AuditCheck::NestedPairNeighbors => "nested-pair-neighbors",
            AuditCheck::OneIntersectionPoint => "one-intersection-point",
            AuditCheck::RedSelection => "red-selection",
            AuditCheck::SamePointNesting => "same-point-nesting",
            AuditCheck::SegmentToBoundary => "segment-to-boundary",
            AuditCheck::SmallBlackCap => "small-black-cap",
            AuditCheck::TriangleCoverage => "triangle-coverage",
        }
    }

    fn nonnested_only(self) -> bool {
        matches!(
            self,
            AuditCheck::CenterContainment | AuditCheck::SegmentToBoundary | AuditCheck::CenterSegmentClearance
        )
    }
}

/// Concrete counterexample: the circles and points involved.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub circles: Vec<CircleId>,
    pub points: Vec<Point>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", content = "witness")]
pub enum AuditStatus {
    Pass,
    Fail(Witness),
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditEntry {
    pub check: AuditCheck,
    pub status: AuditStatus,
    /// Number of instances examined.
    pub checked: usize,
    /// Whether the check relies on point sampling rather than exact tests.
    pub sampled: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditReport {
    /// Mode the input validated in; `None` when it failed both.
    pub mode: Option<ValidationMode>,
    pub nonnested: bool,
    pub classification: Option<Classification>,
    pub entries: Vec<AuditEntry>,
}

impl AuditReport {
    pub fn has_fail(&self) -> bool {
        self.entries.iter().any(|e| matches!(e.status, AuditStatus::Fail(_)))
    }

    pub fn failures(&self) -> impl Iterator<Item = &AuditEntry> {
        self.entries.iter().filter(|e| matches!(e.status, AuditStatus::Fail(_)))
    }

    pub fn get(&self, check: AuditCheck) -> &AuditEntry {
        self.entries.iter().find(|e| e.check == check).expect("every check is reported")
    }
}

type Outcome = (Result<(), Witness>, usize);

fn witness(arr: &Arrangement, circles: &[usize], points: &[Point], detail: String) -> Witness {
    Witness {
        circles: circles.iter().map(|&k| arr.circle(k).id.clone()).collect(),
        points: points.to_vec(),
        detail,
    }
}

struct Ctx<'a> {
    arr: &'a Arrangement,
    graph: IntersectionGraph,
    rel: RelationTable,
    depths: DepthLabeling,
}

impl Ctx<'_> {
    fn inside(&self, p: Point, c: usize) -> bool {
        geom::point_in_circle(p, self.arr.circle(c), self.arr.tol()) == PointLocation::Inside
    }

    fn points(&self, a: usize, b: usize) -> [Point; 2] {
        geom::crossing_points(self.arr.circle(a), self.arr.circle(b))
    }

    fn common_neighbors(&self, a: usize, b: usize) -> Vec<usize> {
        self.graph.neighbors(a).iter().copied().filter(|&c| self.graph.has_edge(b, c)).collect()
    }
}

/// Runs every applicable check. The input is validated first; when it is
/// neither orthogonal nor acute, every entry is `NotApplicable`.
pub fn audit(arr: &Arrangement) -> AuditReport {
    let mode = if validate(arr, ValidationMode::Orthogonal).ok {
        Some(ValidationMode::Orthogonal)
    } else if validate(arr, ValidationMode::Acute).ok {
        Some(ValidationMode::Acute)
    } else {
        None
    };
    let nonnested = is_nonnested(arr);
    let graph = mode.and_then(|_| build_graph(arr).ok());
    let (Some(mode), Some(graph)) = (mode, graph) else {
        return AuditReport { mode: None, nonnested, classification: None, entries: not_applicable() };
    };
    let ctx = Ctx { arr, graph, rel: arr.relations(), depths: depth_labeling(arr) };

    let orthogonal = mode == ValidationMode::Orthogonal;
    let class = if orthogonal && !nonnested {
        Some(classify(arr, &ctx.graph, &ctx.rel, &ctx.depths))
    } else {
        None
    };
    let classification = match &class {
        Some(Ok(Some(c))) => Some(c),
        _ => None,
    };

    let mut entries = Vec::with_capacity(AuditCheck::ALL.len());
    for check in AuditCheck::ALL {
        let applicable = if check.nonnested_only() { nonnested } else { orthogonal };
        let outcome: Option<Outcome> = if !applicable {
            None
        } else {
            match check {
                AuditCheck::CenterContainment => Some(center_containment(&ctx)),
                AuditCheck::SegmentToBoundary => Some(segment_to_boundary(&ctx)),
                AuditCheck::CenterSegmentClearance => Some(center_segment_clearance(&ctx)),
                AuditCheck::NestedPairNeighbors => nested_pair_neighbors(&ctx),
                AuditCheck::OneIntersectionPoint => Some(one_intersection_point(&ctx)),
                AuditCheck::SamePointNesting => Some(same_point_nesting(&ctx)),
                AuditCheck::TriangleCoverage => Some(triangle_coverage(&ctx)),
                AuditCheck::RedSelection => class.as_ref().map(|c| red_selection(&ctx, c)),
                AuditCheck::DeepGreen => classification.map(|c| deep_green(&ctx, c)),
                AuditCheck::GreenIntersectionBudget => classification.map(|c| green_budget(&ctx, c)),
                AuditCheck::EightBoundary => classification.map(|c| eight_boundary(&ctx, c)),
                AuditCheck::SmallBlackCap => classification.and_then(|c| small_black_cap(&ctx, c)),
                AuditCheck::IncidenceBound => classification.and_then(|c| incidence_bound(&ctx, c)),
            }
        };
        let (status, checked) = match outcome {
            None => (AuditStatus::NotApplicable, 0),
            Some((Ok(()), n)) => (AuditStatus::Pass, n),
            Some((Err(w), n)) => (AuditStatus::Fail(w), n),
        };
        entries.push(AuditEntry {
            check,
            status,
            checked,
            sampled: matches!(check, AuditCheck::TriangleCoverage | AuditCheck::SegmentToBoundary),
        });
    }
    entries.sort_by_key(|e| e.check.tag());
    AuditReport { mode: Some(mode), nonnested, classification: classification.cloned(), entries }
}

fn not_applicable() -> Vec<AuditEntry> {
    let mut entries: Vec<AuditEntry> = AuditCheck::ALL
        .iter()
        .map(|&check| AuditEntry { check, status: AuditStatus::NotApplicable, checked: 0, sampled: false })
        .collect();
    entries.sort_by_key(|e| e.check.tag());
    entries
}

fn center_containment(ctx: &Ctx) -> Outcome {
    let n = ctx.arr.len();
    for a in 0..n {
        for b in 0..n {
            if a != b && ctx.inside(ctx.arr.circle(a).center, b) {
                let p = ctx.arr.circle(a).center;
                return (Err(witness(ctx.arr, &[a, b], &[p], "center lies inside another circle".into())), a * n + b);
            }
        }
    }
    (Ok(()), n * n.saturating_sub(1))
}

fn segment_to_boundary(ctx: &Ctx) -> Outcome {
    let arr = ctx.arr;
    let tol = arr.tol();
    let mut checked = 0;
    for a in 0..arr.len() {
        let ca = arr.circle(a);
        let mut samples: Vec<Point> = ctx.graph.neighbors(a).iter().flat_map(|&e| ctx.points(a, e)).collect();
        samples.extend((0..RING_SAMPLES).map(|k| ca.point_at(TAU * k as f64 / RING_SAMPLES as f64)));
        for &p in &samples {
            for b in 0..arr.len() {
                if b == a {
                    continue;
                }
                checked += 1;
                let hits = geom::segment_circle_intersections(ca.center, p, arr.circle(b), tol);
                if hits > 1 {
                    let detail = format!("segment from center to boundary point meets the circle {hits} times");
                    return (Err(witness(arr, &[a, b], &[ca.center, p], detail)), checked);
                }
            }
        }
    }
    (Ok(()), checked)
}

fn center_segment_clearance(ctx: &Ctx) -> Outcome {
    let arr = ctx.arr;
    let mut checked = 0;
    for &(a, b) in ctx.graph.edges() {
        let (pa, pb) = (arr.circle(a).center, arr.circle(b).center);
        for d in 0..arr.len() {
            if d == a || d == b {
                continue;
            }
            checked += 1;
            if geom::segment_circle_intersections(pa, pb, arr.circle(d), arr.tol()) > 0 {
                let detail = "third circle meets the segment between two crossing centers".to_string();
                return (Err(witness(arr, &[a, b, d], &[pa, pb], detail)), checked);
            }
        }
    }
    (Ok(()), checked)
}

fn nested_pair_neighbors(ctx: &Ctx) -> Option<Outcome> {
    let n = ctx.arr.len();
    let mut checked = 0;
    for a in 0..n {
        for b in 0..n {
            if !ctx.rel.contains(a, b) {
                continue;
            }
            checked += 1;
            let common = ctx.common_neighbors(a, b);
            if common.len() > 2 {
                let mut involved = vec![a, b];
                involved.extend(&common);
                let detail = format!("{} circles cross both circles of a nested pair", common.len());
                return Some((Err(witness(ctx.arr, &involved, &[], detail)), checked));
            }
        }
    }
    (checked > 0).then_some((Ok(()), checked))
}

fn one_intersection_point(ctx: &Ctx) -> Outcome {
    let mut checked = 0;
    for &(a, b) in ctx.graph.edges() {
        let pts = ctx.points(a, b);
        for c in ctx.common_neighbors(a, b) {
            checked += 1;
            let inside = pts.iter().filter(|&&p| ctx.inside(p, c)).count();
            if inside != 1 {
                let detail = format!("circle crossing both contains {inside} of their intersection points");
                return (Err(witness(ctx.arr, &[a, b, c], &pts, detail)), checked);
            }
        }
    }
    (Ok(()), checked)
}

fn same_point_nesting(ctx: &Ctx) -> Outcome {
    let mut checked = 0;
    for &(a, b) in ctx.graph.edges() {
        let common = ctx.common_neighbors(a, b);
        for p in ctx.points(a, b) {
            let holders: Vec<usize> = common.iter().copied().filter(|&c| ctx.inside(p, c)).collect();
            for (k, &c) in holders.iter().enumerate() {
                for &d in &holders[k + 1..] {
                    checked += 1;
                    if !ctx.rel.get(c, d).is_nested() {
                        let detail = "two circles holding the same intersection point are not nested".to_string();
                        return (Err(witness(ctx.arr, &[a, b, c, d], &[p], detail)), checked);
                    }
                }
            }
        }
    }
    (Ok(()), checked)
}

/// Low-discrepancy points of the unit square folded into the unit triangle.
fn triangle_samples() -> impl Iterator<Item = (f64, f64)> {
    // Additive recurrence on the plastic number.
    const G: f64 = 1.324_717_957_244_746;
    let (s1, s2) = (1.0 / G, 1.0 / (G * G));
    (0..COVERAGE_SAMPLES).map(move |k| {
        let u = (0.5 + s1 * (k + 1) as f64).fract();
        let v = (0.5 + s2 * (k + 1) as f64).fract();
        if u + v > 1.0 {
            (1.0 - u, 1.0 - v)
        } else {
            (u, v)
        }
    })
}

fn triangle_coverage(ctx: &Ctx) -> Outcome {
    let arr = ctx.arr;
    let tol = arr.tol();
    let samples: Vec<(f64, f64)> = triangle_samples().collect();
    let mut checked = 0;
    for &(a, b) in ctx.graph.edges() {
        for c in ctx.common_neighbors(a, b) {
            if c <= b {
                continue;
            }
            let (pa, pb, pc) = (arr.circle(a).center, arr.circle(b).center, arr.circle(c).center);
            for &(u, v) in &samples {
                checked += 1;
                let p = pa + (pb - pa) * u + (pc - pa) * v;
                let covered = [a, b, c]
                    .iter()
                    .any(|&k| geom::point_in_circle(p, arr.circle(k), tol) != PointLocation::Outside);
                if !covered {
                    let detail = "sample point of the center triangle lies outside all three circles".to_string();
                    return (Err(witness(arr, &[a, b, c], &[p], detail)), checked);
                }
            }
        }
    }
    (Ok(()), checked)
}

fn red_selection(ctx: &Ctx, class: &Result<Option<Classification>, AnalysisError>) -> Outcome {
    match class {
        Ok(Some(c)) => {
            let red = c.indices.red;
            let deep = ctx.graph.neighbors(red).iter().filter(|&&k| ctx.depths.is_deep(k)).count();
            if ctx.depths.depth(red) != 1 || deep > super::RED_DEEP_NEIGHBOR_LIMIT {
                let detail = format!("red circle has depth {} and {deep} deep neighbors", ctx.depths.depth(red));
                return (Err(witness(ctx.arr, &[red], &[], detail)), 1);
            }
            (Ok(()), 1)
        }
        Ok(None) => (Ok(()), 0),
        Err(e) => (Err(Witness { circles: Vec::new(), points: Vec::new(), detail: e.to_string() }), 1),
    }
}

fn green_neighbors(ctx: &Ctx, class: &Classification, black: usize) -> Vec<usize> {
    ctx.graph
        .neighbors(black)
        .iter()
        .copied()
        .filter(|k| class.indices.green.binary_search(k).is_ok())
        .collect()
}

/// Inner black circles crossed by at least two green circles.
fn doubly_green_inner(ctx: &Ctx, class: &Classification) -> Vec<usize> {
    class.indices.inner.iter().copied().filter(|&k| green_neighbors(ctx, class, k).len() >= 2).collect()
}

fn deep_green(ctx: &Ctx, class: &Classification) -> Outcome {
    let mut checked = 0;
    for &k in &class.indices.inner {
        for g in green_neighbors(ctx, class, k) {
            checked += 1;
            if !ctx.depths.is_deep(g) {
                let detail = "shallow green circle crosses an inner black circle".to_string();
                return (Err(witness(ctx.arr, &[class.indices.red, k, g], &[], detail)), checked);
            }
        }
    }
    (Ok(()), checked)
}

fn green_budget(ctx: &Ctx, class: &Classification) -> Outcome {
    let set = &class.indices.red_deep;
    let red = class.indices.red;
    let mut inside = Vec::new();
    let mut pairs = 0;
    for (k, &a) in set.iter().enumerate() {
        for &b in &set[k + 1..] {
            if ctx.graph.has_edge(a, b) {
                pairs += 1;
                inside.extend(ctx.points(a, b).into_iter().filter(|&p| ctx.inside(p, red)));
            }
        }
    }
    if inside.len() > 8 {
        let mut involved = vec![red];
        involved.extend(set);
        let detail = format!("{} intersection points of deep neighbors lie inside the red circle", inside.len());
        return (Err(witness(ctx.arr, &involved, &inside, detail)), pairs);
    }
    (Ok(()), pairs)
}

fn eight_boundary(ctx: &Ctx, class: &Classification) -> Outcome {
    let doubled = doubly_green_inner(ctx, class);
    if !doubled.is_empty() && class.b() < 8 {
        let detail = format!("inner black circle crossed by two greens but only {} boundary black circles", class.b());
        return (Err(witness(ctx.arr, &doubled, &[], detail)), doubled.len());
    }
    (Ok(()), doubled.len())
}

fn small_black_cap(ctx: &Ctx, class: &Classification) -> Option<Outcome> {
    if class.n_b() > 11 {
        return None;
    }
    let doubled = doubly_green_inner(ctx, class);
    if doubled.len() > 3 {
        let detail = format!("{} inner black circles crossed by two greens with {} black circles", doubled.len(), class.n_b());
        return Some((Err(witness(ctx.arr, &doubled, &[], detail)), class.n_b()));
    }
    Some((Ok(()), class.n_b()))
}

fn incidence_bound(ctx: &Ctx, class: &Classification) -> Option<Outcome> {
    let n_b = class.n_b();
    if n_b < 2 {
        return None;
    }
    let black = &class.indices.black;
    let is_black = |k: usize| black.binary_search(&k).is_ok();
    let incident = ctx.graph.edges().iter().filter(|&&(u, v)| is_black(u) || is_black(v)).count();

    let black_edges = ctx.graph.edges().iter().filter(|&&(u, v)| is_black(u) && is_black(v)).count();
    let green_edges: usize = black.iter().map(|&k| green_neighbors(ctx, class, k).len()).sum();
    if black_edges + green_edges != incident {
        let detail = format!(
            "{incident} edges touch black circles but {black_edges} black and {green_edges} green edges were classified"
        );
        return Some((Err(witness(ctx.arr, &[class.indices.red], &[], detail)), incident));
    }

    let i = doubly_green_inner(ctx, class).len();
    let limit = 4 * n_b + i - 3;
    if incident > limit {
        let detail = format!("{incident} edges touch {n_b} black circles, limit {limit}");
        return Some((Err(witness(ctx.arr, black, &[], detail)), incident));
    }
    Some((Ok(()), incident))
}
