use crate::count::TriangleCount;
use crate::graph::{CsrGraph, VertexId};
use crate::intersect::VertexHashSet;

/// Row-by-row hashed prefix counting.
///
/// Process vertices in id order. For vertex `j`, the prefix neighborhood
/// `P = {i ∈ N(j) : i < j}` is the set of already-seen neighbors; load it
/// into the scratch set and, for each `i ∈ P`, probe `i`'s own prefix
/// neighborhood against it. Every hit is an edge `(k, i)` with
/// `k < i < j` and both endpoints adjacent to `j`: one triangle, counted at
/// its largest vertex. This is the same work the forward-hashed scan does,
/// reached by walking complete rows instead of growing sets.
pub fn linear_algebra(g: &CsrGraph) -> TriangleCount {
    let n = g.vertex_count() as VertexId;
    let mut scratch = VertexHashSet::new(g.vertex_count());
    let mut count = 0u64;
    for j in 0..n {
        let row = g.neighbors(j);
        let prefix = &row[..row.partition_point(|&x| x < j)];
        if prefix.len() < 2 {
            continue;
        }
        scratch.load(prefix);
        for &i in prefix {
            let ri = g.neighbors(i);
            count += scratch.probe_count(&ri[..ri.partition_point(|&x| x < i)]) as u64;
        }
        scratch.clear();
    }
    TriangleCount(count)
}
