use crate::count::TriangleCount;
use crate::graph::{degree_order, CsrGraph, VertexId};
use crate::intersect::{self, VertexHashSet};

/// Growable per-vertex predecessor sets packed into one arena.
///
/// The forward family scans vertices in ascending id; when edge `(u, v)`
/// with `u < v` is processed, `u` is appended to `A(v)`. Each `A(v)` can
/// therefore hold at most the number of neighbors of `v` with smaller ids,
/// so one arena of total capacity `m` serves the whole run, and every list
/// stays sorted because the appended `u` values only increase.
#[derive(Debug)]
pub struct ForwardSets {
    arena: Vec<VertexId>,
    start: Vec<usize>,
    len: Vec<usize>,
}

impl ForwardSets {
    /// Preallocate capacity for `g`: slot `v` holds `|{u ∈ N(v) : u < v}|`
    /// entries, summing to exactly `m`.
    pub fn for_graph(g: &CsrGraph) -> ForwardSets {
        let n = g.vertex_count();
        let mut start = vec![0usize; n + 1];
        for v in 0..n as VertexId {
            let row = g.neighbors(v);
            start[v as usize + 1] = row.partition_point(|&x| x < v);
        }
        for i in 0..n {
            start[i + 1] += start[i];
        }
        let capacity = start[n];
        debug_assert_eq!(capacity, g.edge_count());
        ForwardSets { arena: vec![0; capacity], start, len: vec![0; n] }
    }

    /// Current contents of `A(v)`, sorted ascending.
    pub fn slice(&self, v: VertexId) -> &[VertexId] {
        let s = self.start[v as usize];
        &self.arena[s..s + self.len[v as usize]]
    }

    /// Append `u` to `A(v)`.
    pub fn push(&mut self, v: VertexId, u: VertexId) {
        let slot = self.start[v as usize] + self.len[v as usize];
        debug_assert!(slot < self.start[v as usize + 1], "forward set overflow at {v}");
        self.arena[slot] = u;
        self.len[v as usize] += 1;
    }
}

/// Forward: scan edges `(u, v)` with `u < v` in ascending `u`; count
/// `|A(u) ∩ A(v)|` by merge, then append `u` to `A(v)`. At that moment
/// `A(x)` holds exactly the processed neighbors of `x` smaller than `x`, so
/// each triangle is found once at its largest vertex.
pub fn forward(g: &CsrGraph) -> TriangleCount {
    let n = g.vertex_count() as VertexId;
    let mut sets = ForwardSets::for_graph(g);
    let mut count = 0u64;
    for u in 0..n {
        let row = g.neighbors(u);
        for &v in &row[row.partition_point(|&x| x < u)..] {
            count += intersect::merge(sets.slice(u), sets.slice(v)) as u64;
            sets.push(v, u);
        }
    }
    TriangleCount(count)
}

/// Forward-hashed: the forward scan with the `A(u) ∩ A(v)` merge replaced by
/// hashing. `A(u)` is fixed while `u`'s row is scanned, so it is loaded into
/// the scratch set once per vertex and each `A(v)` is probed against it.
/// With `reorder` set the graph is first relabeled by decreasing degree
/// (the `FHD` registry entry), which bounds the probe lists on skewed
/// graphs; the reordering cost is part of this call.
pub fn forward_hashed(g: &CsrGraph, reorder: bool) -> TriangleCount {
    if reorder {
        let (relabeled, _) = degree_order(g);
        forward_hashed_core(&relabeled)
    } else {
        forward_hashed_core(g)
    }
}

pub(crate) fn forward_hashed_core(g: &CsrGraph) -> TriangleCount {
    let n = g.vertex_count() as VertexId;
    let mut sets = ForwardSets::for_graph(g);
    let mut scratch = VertexHashSet::new(g.vertex_count());
    let mut count = 0u64;
    for u in 0..n {
        let row = g.neighbors(u);
        let above = &row[row.partition_point(|&x| x < u)..];
        if above.is_empty() {
            continue;
        }
        scratch.load(sets.slice(u));
        for &v in above {
            count += scratch.probe_count(sets.slice(v)) as u64;
            sets.push(v, u);
        }
        scratch.clear();
    }
    TriangleCount(count)
}
