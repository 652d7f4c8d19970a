use crate::count::TriangleCount;
use crate::graph::{CsrGraph, VertexId};

/// Reference counter: examine every triple `u < v < w` and count those whose
/// three edges all exist, with membership checked on the sorted adjacency.
///
/// `O(n^2 log d + m n log d)` time; intended as the test oracle for graphs
/// up to a few thousand vertices, not for benchmarking.
pub fn brute_force(g: &CsrGraph) -> TriangleCount {
    let n = g.vertex_count() as VertexId;
    let mut count = 0u64;
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                continue;
            }
            for w in v + 1..n {
                if g.has_edge(u, w) && g.has_edge(v, w) {
                    count += 1;
                }
            }
        }
    }
    TriangleCount(count)
}
