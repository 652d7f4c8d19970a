use crate::bfs::{bfs_forest, classify_edges};
use crate::count::forward::forward_hashed_core;
use crate::count::TriangleCount;
use crate::graph::{degree_order, CsrGraph, VertexId};
use crate::intersect::VertexHashSet;

/// Instrumentation from one [`fast`] run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FastStats {
    /// Hash membership tests performed while intersecting spanning-edge
    /// neighborhoods (the second phase). Bounded by
    /// `Σ min(d(u), d(v))` over the edges of the input graph, because each
    /// horizontal edge probes the spanning neighbors of its lower-degree
    /// endpoint.
    pub probes: u64,
    /// Edges whose endpoints share a BFS level.
    pub horizontal_edges: usize,
    /// Edges that cross adjacent BFS levels.
    pub spanning_edges: usize,
}

/// Hybrid counter: split edges by BFS level, count triangles lying entirely
/// in the horizontal subgraph with the forward-hashed scan, then find each
/// mixed triangle through its unique horizontal edge.
///
/// A triangle is either all-horizontal (all three vertices on one level) or
/// has exactly one horizontal edge `(u, v)` and a witness `w` one level
/// away, reached through two spanning edges. Phase one handles the first
/// kind on `G0`. Phase two loads each vertex's spanning neighborhood
/// `N_G1(u)` into the scratch set, and for every horizontal edge `(u, v)`
/// probes the spanning neighborhood of the lower-degree endpoint against the
/// other side's set, counting hits. Probing the lower-degree side keeps the
/// per-edge cost at `min(d(u), d(v))`; degree ties fall back to id order so
/// each horizontal edge is processed exactly once.
///
/// With `reorder` set the graph is first relabeled by decreasing degree (the
/// `BaderD` registry entry); BFS, the split, and both phases then run on the
/// relabeled graph, and the reordering cost is part of this call.
pub fn fast(g: &CsrGraph, reorder: bool) -> TriangleCount {
    fast_instrumented(g, reorder).0
}

/// [`fast`] plus its probe counter; same counting behavior.
pub fn fast_instrumented(g: &CsrGraph, reorder: bool) -> (TriangleCount, FastStats) {
    if reorder {
        let (relabeled, _) = degree_order(g);
        fast_core(&relabeled)
    } else {
        fast_core(g)
    }
}

fn fast_core(g: &CsrGraph) -> (TriangleCount, FastStats) {
    let n = g.vertex_count() as VertexId;
    let levels = bfs_forest(g);
    let part = classify_edges(g, &levels);
    let (g0, g1) = (&part.g0, &part.g1);

    let mut count = forward_hashed_core(g0).0;

    let mut scratch = VertexHashSet::new(g.vertex_count());
    let mut probes = 0u64;
    for u in 0..n {
        let horizontal = g0.neighbors(u);
        if horizontal.is_empty() {
            continue;
        }
        let spanning = g1.neighbors(u);
        if spanning.is_empty() {
            // No witnesses can involve u's side; the partners with the
            // smaller degree handle their own probes.
            continue;
        }
        scratch.load(spanning);
        let du = g.degree(u);
        for &v in horizontal {
            let dv = g.degree(v);
            // Process each horizontal edge exactly once, from its
            // higher-degree endpoint, probing the lower-degree side.
            if dv < du || (dv == du && u < v) {
                for &w in g1.neighbors(v) {
                    probes += 1;
                    if scratch.contains(w) {
                        count += 1;
                    }
                }
            }
        }
        scratch.clear();
    }
    let stats = FastStats {
        probes,
        horizontal_edges: g0.edge_count(),
        spanning_edges: g1.edge_count(),
    };
    (TriangleCount(count), stats)
}
