use crate::count::TriangleCount;
use crate::graph::{CsrGraph, VertexId};

/// Vertex iterator: enumerate 2-paths `(u, v, w)` centered on each vertex
/// `v` and check for the closing edge `(u, w)` by binary search.
///
/// Plain form doubly enumerates `N(v)` (all ordered pairs), finding each
/// triangle six times, and divides by 6. The direction-oriented form only
/// considers `v < u < w`, finding each triangle once at its smallest vertex.
pub fn vertex_iterator(g: &CsrGraph, oriented: bool) -> TriangleCount {
    let n = g.vertex_count() as VertexId;
    let mut total = 0u64;
    if oriented {
        for v in 0..n {
            let row = g.neighbors(v);
            let above = &row[row.partition_point(|&x| x < v)..];
            for (i, &u) in above.iter().enumerate() {
                for &w in &above[i + 1..] {
                    if g.has_edge(u, w) {
                        total += 1;
                    }
                }
            }
        }
        TriangleCount(total)
    } else {
        for v in 0..n {
            let row = g.neighbors(v);
            for &u in row {
                for &w in row {
                    if u != w && g.has_edge(u, w) {
                        total += 1;
                    }
                }
            }
        }
        TriangleCount(total / 6)
    }
}
