//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use orthocircle::analysis::{audit, AuditStatus};
use orthocircle::arrangement::{is_nonnested, validate, Arrangement, ValidationMode};
use orthocircle::cells::build_subdivision;
use orthocircle::generators::{
    augment_triangles, eval_b_parameters, make_b, make_nonnested_b, make_random_nonnested, perturb_acute,
};
use orthocircle::geom::{Circle, Point, Tolerance};
use orthocircle::graph::{build_graph, distinct_count, find_forbidden, max_edges_c3c4_free, SmallGraph};

type Check = Result<(), String>;
/// Number, name, time limit, body.
type Criterion = (u32, &'static str, Duration, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn random_instances() -> Vec<Arrangement> {
    (0..200u64).map(|k| make_random_nonnested(5 + (k % 56) as usize, k).expect("random instance")).collect()
}

fn two_orthogonal() -> Arrangement {
    Arrangement::new(
        vec![
            Circle::new("A", Point::ORIGIN, 1.0).unwrap(),
            Circle::new("B", Point::new(std::f64::consts::SQRT_2, 0.0), 1.0).unwrap(),
        ],
        Tolerance::default(),
    )
    .unwrap()
}

fn stacks() -> impl Iterator<Item = (usize, usize)> {
    (1..=6).flat_map(|x| (5..=20).map(move |a| (x, a)))
}

fn criterion_1() -> Check {
    for (x, a) in stacks() {
        let arr = make_b(x, a).map_err(|e| e.to_string())?;
        let report = validate(&arr, ValidationMode::Orthogonal);
        ensure(report.ok, || format!("B({x},{a}) not orthogonal: {:?}", report.violations.first()))?;
        let g = build_graph(&arr).map_err(|e| e.to_string())?;
        let (n, m) = (x * (a + 1), 4 * x * a - 2 * a);
        ensure(g.vertex_count() == n && g.edge_count() == m, || {
            format!("B({x},{a}): got ({}, {}), expected ({n}, {m})", g.vertex_count(), g.edge_count())
        })?;
    }
    Ok(())
}

fn criterion_2() -> Check {
    for x in 1..=10 {
        let arr = make_nonnested_b(x).map_err(|e| e.to_string())?;
        let n = 5 * x + 1;
        ensure(is_nonnested(&arr), || format!("x={x}: nested"))?;
        ensure(validate(&arr, ValidationMode::Orthogonal).ok, || format!("x={x}: not orthogonal"))?;
        let g = build_graph(&arr).map_err(|e| e.to_string())?;
        ensure(g.vertex_count() == n, || format!("x={x}: {} vertices", g.vertex_count()))?;
        ensure(g.edge_count() == 3 * n - 8, || format!("x={x}: {} edges, expected {}", g.edge_count(), 3 * n - 8))?;
        let crossings = g.crossing_pairs().count();
        ensure(crossings == 0, || format!("x={x}: {crossings} crossings"))?;
        let outer = distinct_count(&g.outer_face_walk().map_err(|e| e.to_string())?);
        ensure(outer == 5, || format!("x={x}: outer face has {outer} vertices"))?;
    }
    Ok(())
}

/// Independent induced-subgraph test on an adjacency matrix.
fn induced_cycle_free(n: usize, adj: &[[bool; 7]; 7]) -> bool {
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if adj[a][b] && adj[b][c] && adj[a][c] {
                    return false;
                }
                for d in c + 1..n {
                    let q = [a, b, c, d];
                    let edges: usize =
                        (0..4).map(|i| (i + 1..4).filter(|&j| adj[q[i]][q[j]]).count()).sum();
                    let all_deg_two = q.iter().all(|&v| q.iter().filter(|&&w| adj[v][w]).count() == 2);
                    if edges == 4 && all_deg_two {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn criterion_3() -> Check {
    let (max, witness): (usize, SmallGraph) = max_edges_c3c4_free(7).map_err(|e| e.to_string())?;
    ensure(max == 8, || format!("maximum {max}, expected 8"))?;
    let mut adj = [[false; 7]; 7];
    for (u, v) in witness.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    ensure(witness.vertex_count() == 7, || "witness is not on 7 vertices".into())?;
    ensure(witness.edges().len() == 8, || format!("witness has {} edges", witness.edges().len()))?;
    ensure(induced_cycle_free(7, &adj), || "witness has an induced C3 or C4".into())
}

fn criterion_4() -> Check {
    for (k, arr) in random_instances().iter().enumerate() {
        let n = arr.len();
        ensure(validate(arr, ValidationMode::Orthogonal).ok && is_nonnested(arr), || format!("instance {k} invalid"))?;
        let g = build_graph(arr).map_err(|e| e.to_string())?;
        let crossings = g.crossing_pairs().count();
        ensure(crossings == 0, || format!("instance {k} (n={n}): {crossings} crossings"))?;
        ensure(n < 5 || g.edge_count() <= 3 * n - 8, || format!("instance {k}: m={} n={n}", g.edge_count()))?;
    }
    for k in 0..50u64 {
        let base = if k % 5 == 0 {
            make_nonnested_b(1 + (k as usize / 5) % 10)
        } else {
            make_random_nonnested(5 + (k % 56) as usize, 10_000 + k)
        }
        .map_err(|e| e.to_string())?;
        let arr = perturb_acute(&base, k).map_err(|e| e.to_string())?.arrangement;
        let n = arr.len();
        ensure(validate(&arr, ValidationMode::Acute).ok, || format!("acute instance {k} not acute"))?;
        ensure(is_nonnested(&arr), || format!("acute instance {k} nested"))?;
        let g = build_graph(&arr).map_err(|e| e.to_string())?;
        let crossings = g.crossing_pairs().count();
        ensure(crossings == 0, || format!("acute instance {k}: {crossings} crossings"))?;
        ensure(g.edge_count() <= 3 * n - 6, || format!("acute instance {k}: m={} n={n}", g.edge_count()))?;
    }
    Ok(())
}

fn generated_orthogonal() -> Result<Vec<(String, Arrangement)>, String> {
    let mut out = Vec::new();
    for (x, a) in stacks() {
        out.push((format!("B({x},{a})"), make_b(x, a).map_err(|e| e.to_string())?));
    }
    for x in 1..=10 {
        out.push((format!("nonnested({x})"), make_nonnested_b(x).map_err(|e| e.to_string())?));
    }
    for (k, arr) in random_instances().into_iter().enumerate() {
        out.push((format!("random#{k}"), arr));
    }
    for (name, arr) in augmented()? {
        out.push((name, arr));
    }
    Ok(out)
}

fn augmented() -> Result<Vec<(String, Arrangement)>, String> {
    let mut out = vec![("augment(pair)".to_string(), augment_triangles(&two_orthogonal()).map_err(|e| e.to_string())?)];
    for x in 1..=2 {
        let b = make_b(x, 5).map_err(|e| e.to_string())?;
        out.push((format!("augment(B({x},5))"), augment_triangles(&b).map_err(|e| e.to_string())?));
    }
    Ok(out)
}

fn criterion_5() -> Check {
    for (name, arr) in generated_orthogonal()? {
        let g = build_graph(&arr).map_err(|e| e.to_string())?;
        if let Some(w) = find_forbidden(&g) {
            return Err(format!("{name}: {:?} on {:?}", w.kind, w.vertices));
        }
    }
    Ok(())
}

fn criterion_6() -> Check {
    let pair = build_subdivision(&two_orthogonal()).map_err(|e| e.to_string())?;
    let census = pair.census();
    ensure(pair.euler_holds(), || "pair: Euler relation fails".into())?;
    ensure(census.digon_count == 3 && census.triangle_count == 0, || format!("pair: {census:?}"))?;

    let aug = augmented()?;
    let sub = build_subdivision(&aug[0].1).map_err(|e| e.to_string())?;
    ensure(sub.euler_holds(), || "augmented pair: Euler relation fails".into())?;
    ensure(sub.census().triangle_count == 8, || format!("augmented pair: {} triangles", sub.census().triangle_count))?;

    for (x, (name, arr)) in (1..=2).zip(&aug[1..]) {
        let expected_added = 8 * x * 5 - 4 * 5;
        ensure(arr.len() == x * 6 + expected_added, || format!("{name}: {} circles", arr.len()))?;
        let sub = build_subdivision(arr).map_err(|e| format!("{name}: {e}"))?;
        ensure(sub.euler_holds(), || format!("{name}: Euler relation fails"))?;
        let triangles = sub.census().triangle_count;
        ensure(triangles >= 4 * expected_added, || format!("{name}: {triangles} triangles < {}", 4 * expected_added))?;
    }
    Ok(())
}

fn criterion_7() -> Check {
    for (name, arr) in generated_orthogonal()? {
        let g = build_graph(&arr).map_err(|e| e.to_string())?;
        let (n, m) = (g.vertex_count() as f64, g.edge_count() as f64);
        ensure(m <= (4.0 + 5.0 / 11.0) * n, || format!("{name}: m={m} n={n}"))?;
    }
    Ok(())
}

fn criterion_8() -> Check {
    let mut targets: Vec<(String, Arrangement)> = Vec::new();
    for x in 1..=4 {
        for a in 5..=10 {
            targets.push((format!("B({x},{a})"), make_b(x, a).map_err(|e| e.to_string())?));
        }
    }
    targets.extend(random_instances().into_iter().enumerate().map(|(k, a)| (format!("random#{k}"), a)));
    targets.extend(augmented()?);
    for (name, arr) in &targets {
        let report = audit(arr);
        ensure(report.mode == Some(ValidationMode::Orthogonal), || format!("{name}: not audited as orthogonal"))?;
        let failure = report.failures().next().map(|e| match &e.status {
            AuditStatus::Fail(w) => format!("{name}: {} failed: {} {:?}", e.check.tag(), w.detail, w.circles),
            _ => unreachable!(),
        });
        if let Some(msg) = failure {
            return Err(msg);
        }
    }
    Ok(())
}

fn criterion_9() -> Check {
    let eps = Tolerance::default().rel_eps();
    for (x, a) in stacks() {
        let p = eval_b_parameters(x, a).map_err(|e| e.to_string())?;
        for i in 0..x {
            let (h, s, d) = (p.hub_radii[i], p.satellite_radii[i], p.orbit_radii[i]);
            ensure((h * h + s * s - d * d).abs() <= eps * d * d, || format!("({x},{a}) wheel {}: h²+s²≠d²", i + 1))?;
            let c0 = p.centers[i][0].to_point();
            let c1 = p.centers[i][1].to_point();
            let spacing = c0.distance(c1);
            let expected = std::f64::consts::SQRT_2 * s;
            ensure((spacing - expected).abs() <= eps * expected, || {
                format!("({x},{a}) wheel {}: spacing {spacing} vs {expected}", i + 1)
            })?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (1, "wheel stacks have x(a+1) vertices and 4xa-2a edges", Duration::from_secs(5), criterion_1),
        (2, "nonnested stacks are tight at 3n-8 with a 5-vertex outer face", Duration::from_secs(2), criterion_2),
        (3, "graphs on 7 vertices without induced C3/C4 have at most 8 edges", Duration::from_secs(60), criterion_3),
        (4, "random nonnested and acute instances draw without crossings", Duration::from_secs(30), criterion_4),
        (5, "no K4 or induced C4 in generated graphs", Duration::from_secs(10), criterion_5),
        (6, "cell census of pairs and augmented stacks", Duration::from_secs(20), criterion_6),
        (7, "edge count at most (4+5/11)n on generated instances", Duration::from_secs(60), criterion_7),
        (8, "audit reports no failures on generated instances", Duration::from_secs(60), criterion_8),
        (9, "construction constants satisfy the orthogonality identities", Duration::from_secs(1), criterion_9),
    ];
    let mut failed = 0;
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let result = result.and_then(|()| {
            ensure(elapsed <= limit, || format!("took {:.2}s, limit {:.0}s", elapsed.as_secs_f64(), limit.as_secs_f64()))
        });
        match result {
            Ok(()) => println!("PASS criterion {id}: {name} ({:.3}s)", elapsed.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {id}: {name} ({:.3}s): {msg}", elapsed.as_secs_f64());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
