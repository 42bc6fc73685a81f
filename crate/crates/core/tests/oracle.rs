//! The exhaustive search cross-checked against an independent enumerator.

use orthocircle::graph::{max_edges_c3c4_free, OracleError};

/// Recursive edge-by-edge search with an adjacency matrix, pruning as soon as
/// an added edge closes a triangle or an induced 4-cycle.
fn independent_max(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut adj = vec![vec![false; n]; n];

    fn bad(adj: &[Vec<bool>], n: usize) -> bool {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if a != b && b != c && a != c && adj[a][b] && adj[b][c] && adj[a][c] {
                        return true;
                    }
                    for d in 0..n {
                        let distinct = [a, b, c, d].iter().collect::<std::collections::HashSet<_>>().len() == 4;
                        if distinct
                            && adj[a][b]
                            && adj[b][c]
                            && adj[c][d]
                            && adj[d][a]
                            && !adj[a][c]
                            && !adj[b][d]
                        {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    // Removing an edge can create an induced C4, so the final graph is checked too.
    fn go(k: usize, pairs: &[(usize, usize)], adj: &mut Vec<Vec<bool>>, n: usize, edges: usize, best: &mut usize) {
        if edges + (pairs.len() - k) <= *best {
            return;
        }
        if k == pairs.len() {
            if !bad(adj, n) {
                *best = edges;
            }
            return;
        }
        let (u, v) = pairs[k];
        adj[u][v] = true;
        adj[v][u] = true;
        go(k + 1, pairs, adj, n, edges + 1, best);
        adj[u][v] = false;
        adj[v][u] = false;
        go(k + 1, pairs, adj, n, edges, best);
    }

    let mut best = 0;
    go(0, &pairs, &mut adj, n, 0, &mut best);
    best
}

#[test]
fn small_maxima_agree() {
    for n in 1..=6 {
        assert_eq!(max_edges_c3c4_free(n).unwrap().0, independent_max(n), "n={n}");
    }
}

#[test]
fn known_values() {
    let expected = [0, 1, 2, 3, 5, 6, 8];
    for (n, &m) in (1..=7).zip(&expected) {
        assert_eq!(max_edges_c3c4_free(n).unwrap().0, m, "n={n}");
    }
}

#[test]
fn seven_vertex_witness_is_two_glued_pentagons() {
    let (_, g) = max_edges_c3c4_free(7).unwrap();
    assert_eq!(g.degree_sequence(), vec![2, 2, 2, 2, 2, 3, 3]);
    assert!(!g.has_induced_c3() && !g.has_induced_c4());
    // The two degree-3 vertices are at distance 2.
    let deg = |v: usize| (0..7).filter(|&w| g.has_edge(v, w)).count();
    let hubs: Vec<usize> = (0..7).filter(|&v| deg(v) == 3).collect();
    assert!(!g.has_edge(hubs[0], hubs[1]));
    assert!((0..7).any(|w| g.has_edge(hubs[0], w) && g.has_edge(hubs[1], w)));
}

#[test]
fn out_of_range() {
    assert_eq!(max_edges_c3c4_free(0).unwrap_err(), OracleError::OutOfRange(0));
    assert!(max_edges_c3c4_free(8).is_err());
}
