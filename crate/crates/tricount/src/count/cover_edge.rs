use crate::bfs::bfs_forest;
use crate::count::TriangleCount;
use crate::graph::{degree_order, CsrGraph, VertexId};
use crate::intersect::VertexHashSet;

/// Cover-edge counter.
///
/// BFS levels make every triangle contain at least one horizontal edge (two
/// of its vertices share a level), so the horizontal edges cover all
/// triangles. For each horizontal edge `(u, v)` with `u < v`, every witness
/// `w ∈ N(u) ∩ N(v)` closes a triangle; a triangle with one horizontal edge
/// has a unique cover edge, while an all-horizontal triangle has three and
/// is kept only from its lexicographically first edge (`w` larger than both
/// endpoints). The intersection is evaluated by loading `N(u)` once per
/// vertex and probing each horizontal partner's row against it.
///
/// With `reorder` set the graph is relabeled by decreasing degree before
/// counting (the `CED` registry entry); BFS then runs on the relabeled
/// graph, and the reordering cost is part of this call.
pub fn cover_edge(g: &CsrGraph, reorder: bool) -> TriangleCount {
    if reorder {
        let (relabeled, _) = degree_order(g);
        cover_edge_core(&relabeled)
    } else {
        cover_edge_core(g)
    }
}

fn cover_edge_core(g: &CsrGraph) -> TriangleCount {
    let n = g.vertex_count() as VertexId;
    let levels = bfs_forest(g);
    let mut scratch = VertexHashSet::new(g.vertex_count());
    let mut count = 0u64;
    for u in 0..n {
        let row = g.neighbors(u);
        let lu = levels.level(u);
        let mut loaded = false;
        for &v in &row[row.partition_point(|&x| x < u)..] {
            if levels.level(v) != lu {
                continue;
            }
            if !loaded {
                scratch.load(row);
                loaded = true;
            }
            scratch.probe_visit(g.neighbors(v), |w| {
                if levels.level(w) != lu || v < w {
                    count += 1;
                }
            });
        }
        if loaded {
            scratch.clear();
        }
    }
    TriangleCount(count)
}
