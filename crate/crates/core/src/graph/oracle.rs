//! Exhaustive search over all labeled graphs on at most seven vertices.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

pub const MAX_ORACLE_VERTICES: usize = 7;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("vertex count must be in 1..={MAX_ORACLE_VERTICES}, got {0}")]
    OutOfRange(usize),
}

/// Simple undirected graph on `n <= 7` vertices; bit `k` of `mask` is the
/// k-th pair in lexicographic order (0,1), (0,2), ..., (n-2,n-1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SmallGraph {
    pub n: u8,
    pub mask: u32,
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    // Pairs starting below i, then offset within row i.
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

impl SmallGraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Self {
        assert!(n <= MAX_ORACLE_VERTICES);
        let mut mask = 0;
        for &(u, v) in edges {
            assert!(u != v && u < n && v < n);
            mask |= 1 << pair_index(n, u.min(v), u.max(v));
        }
        SmallGraph { n: n as u8, mask }
    }

    pub fn vertex_count(&self) -> usize {
        self.n as usize
    }

    pub fn edge_count(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v {
            return false;
        }
        let n = self.vertex_count();
        self.mask >> pair_index(n, u.min(v), u.max(v)) & 1 == 1
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertex_count();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut seq: Vec<usize> =
            (0..n).map(|v| (0..n).filter(|&w| self.has_edge(v, w)).count()).collect();
        seq.sort_unstable();
        seq
    }

    pub fn has_induced_c3(&self) -> bool {
        Patterns::new(self.vertex_count()).has_c3(self.mask)
    }

    pub fn has_induced_c4(&self) -> bool {
        Patterns::new(self.vertex_count()).has_c4(self.mask)
    }
}

/// Precomputed pair masks for every 3- and 4-subset.
struct Patterns {
    triangles: Vec<u32>,
    /// (mask of the 6 pairs, the three 4-cycle patterns on them)
    quads: Vec<(u32, [u32; 3])>,
}

impl Patterns {
    fn new(n: usize) -> Self {
        let bit = |i: usize, j: usize| 1u32 << pair_index(n, i.min(j), i.max(j));
        let mut triangles = Vec::new();
        let mut quads = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    triangles.push(bit(a, b) | bit(a, c) | bit(b, c));
                    for d in c + 1..n {
                        let all = bit(a, b) | bit(a, c) | bit(a, d) | bit(b, c) | bit(b, d) | bit(c, d);
                        // The three perfect matchings name the missing chords.
                        let cycles = [
                            all & !(bit(a, b) | bit(c, d)),
                            all & !(bit(a, c) | bit(b, d)),
                            all & !(bit(a, d) | bit(b, c)),
                        ];
                        quads.push((all, cycles));
                    }
                }
            }
        }
        Patterns { triangles, quads }
    }

    #[inline]
    fn has_c3(&self, mask: u32) -> bool {
        self.triangles.iter().any(|&t| t & !mask == 0)
    }

    #[inline]
    fn has_c4(&self, mask: u32) -> bool {
        self.quads.iter().any(|&(all, cycles)| {
            let induced = mask & all;
            cycles.contains(&induced)
        })
    }
}

/// Maximum edge count over all graphs on `n` vertices with neither an induced
/// triangle nor an induced 4-cycle, with the smallest maximizing mask.
///
/// Iterates every one of the `2^(n(n-1)/2)` masks; work is split across
/// threads but the result is the same as a sequential scan.
pub fn max_edges_c3c4_free(n: usize) -> Result<(usize, SmallGraph), OracleError> {
    if !(1..=MAX_ORACLE_VERTICES).contains(&n) {
        return Err(OracleError::OutOfRange(n));
    }
    let pairs = n * (n - 1) / 2;
    let patterns = Patterns::new(n);
    let total: u64 = 1 << pairs;

    let best = (0..total)
        .into_par_iter()
        .map(|m| m as u32)
        .filter(|&m| !patterns.has_c3(m) && !patterns.has_c4(m))
        .map(|m| (m.count_ones(), m))
        // Max edges, then the smallest mask among ties.
        .reduce(|| (0, u32::MAX), |a, b| {
            if a.0 != b.0 {
                if a.0 > b.0 { a } else { b }
            } else if a.1 <= b.1 {
                a
            } else {
                b
            }
        });
    Ok((best.0 as usize, SmallGraph { n: n as u8, mask: best.1 }))
}
