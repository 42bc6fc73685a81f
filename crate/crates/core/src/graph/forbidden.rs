use serde::Serialize;

use super::IntersectionGraph;
use crate::geom::CircleId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ForbiddenKind {
    K4,
    InducedC4,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForbiddenWitness {
    pub kind: ForbiddenKind,
    pub vertices: [CircleId; 4],
}

struct BitRows {
    words: usize,
    bits: Vec<u64>,
}

impl BitRows {
    fn new(g: &IntersectionGraph) -> Self {
        let n = g.vertex_count();
        let words = n.div_ceil(64).max(1);
        let mut bits = vec![0u64; n * words];
        for &(u, v) in g.edges() {
            bits[u * words + v / 64] |= 1 << (v % 64);
            bits[v * words + u / 64] |= 1 << (u % 64);
        }
        BitRows { words, bits }
    }

    #[inline]
    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }
}

/// Exhaustive scan of all 4-subsets for a K4 or an induced 4-cycle.
pub fn find_forbidden(g: &IntersectionGraph) -> Option<ForbiddenWitness> {
    let n = g.vertex_count();
    let rows = BitRows::new(g);
    let witness = |kind, q: [usize; 4]| ForbiddenWitness {
        kind,
        vertices: q.map(|v| g.id(v).clone()),
    };

    for a in 0..n {
        for b in a + 1..n {
            let ab = rows.adjacent(a, b);
            for c in b + 1..n {
                let ac = rows.adjacent(a, c);
                let bc = rows.adjacent(b, c);
                // Both patterns need at least one edge among any three vertices.
                if !(ab || ac || bc) {
                    continue;
                }
                for d in c + 1..n {
                    let ad = rows.adjacent(a, d);
                    let bd = rows.adjacent(b, d);
                    let cd = rows.adjacent(c, d);
                    let count = [ab, ac, ad, bc, bd, cd].iter().filter(|&&e| e).count();
                    if count == 6 {
                        return Some(witness(ForbiddenKind::K4, [a, b, c, d]));
                    }
                    if count != 4 {
                        continue;
                    }
                    // Four edges on four vertices form a C4 exactly when the two
                    // missing pairs are complementary: every degree is 2.
                    let degrees = [
                        ab as u8 + ac as u8 + ad as u8,
                        ab as u8 + bc as u8 + bd as u8,
                        ac as u8 + bc as u8 + cd as u8,
                        ad as u8 + bd as u8 + cd as u8,
                    ];
                    if degrees == [2, 2, 2, 2] {
                        return Some(witness(ForbiddenKind::InducedC4, [a, b, c, d]));
                    }
                }
            }
        }
    }
    None
}
