use crate::count::TriangleCount;
use crate::graph::{CsrGraph, VertexId};
use crate::intersect;

/// Lower-triangular row merge: for every edge `(u, v)` with `v < u`,
/// accumulate `|N_L(u) ∩ N_L(v)|` where `N_L(x)` keeps only neighbors
/// smaller than `x`. Each triangle `w < v < u` is then counted exactly once,
/// at its largest vertex through its middle vertex.
pub fn tri_simple(g: &CsrGraph) -> TriangleCount {
    let n = g.vertex_count() as VertexId;
    let mut count = 0u64;
    for u in 0..n {
        let row = g.neighbors(u);
        let lower_u = &row[..row.partition_point(|&x| x < u)];
        for &v in lower_u {
            let rv = g.neighbors(v);
            let lower_v = &rv[..rv.partition_point(|&x| x < v)];
            count += intersect::merge(lower_u, lower_v) as u64;
        }
    }
    TriangleCount(count)
}
