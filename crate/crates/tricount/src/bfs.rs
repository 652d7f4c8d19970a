//! Whole-graph BFS levels and the horizontal / level-spanning edge split.
//!
//! A BFS forest assigns every vertex a level: roots sit at level 0 and each
//! discovered vertex is one level below its parent. Because BFS explores a
//! component level by level, the endpoints of any edge differ by at most one
//! level. That splits the edge set into `E0`, the horizontal edges whose
//! endpoints share a level, and `E1`, the spanning edges that cross exactly
//! one level. Every triangle has two vertices on the same level (three
//! pairwise level differences of at most one leave no alternative), so `E0`
//! covers all triangles: each contains at least one horizontal edge. The
//! counters in [`crate::count`] built on this split exploit that `E0` is
//! small on high-diameter graphs such as road networks.

use std::collections::VecDeque;

use crate::graph::{CsrGraph, VertexId};

/// Per-vertex BFS depth over a whole-graph BFS forest, plus the roots that
/// seeded each tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelAssignment {
    levels: Vec<u32>,
    roots: Vec<VertexId>,
}

impl LevelAssignment {
    pub fn level(&self, v: VertexId) -> u32 {
        self.levels[v as usize]
    }

    pub fn levels(&self) -> &[u32] {
        &self.levels
    }

    /// One root per connected component, in discovery order.
    pub fn roots(&self) -> &[VertexId] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }
}

/// BFS every component with roots tried in ascending vertex id.
pub fn bfs_forest(g: &CsrGraph) -> LevelAssignment {
    forest(g, (0..g.vertex_count() as VertexId).collect::<Vec<_>>().as_slice())
}

/// BFS every component, trying roots in the order given by `root_order`.
/// Each root is the first still-unvisited vertex of the order. Panics if
/// `root_order` is not a permutation of the vertex set.
pub fn bfs_forest_with_roots(g: &CsrGraph, root_order: &[VertexId]) -> LevelAssignment {
    let n = g.vertex_count();
    assert_eq!(root_order.len(), n, "root order length must match vertex count");
    let mut seen = vec![false; n];
    for &v in root_order {
        assert!(
            (v as usize) < n && !std::mem::replace(&mut seen[v as usize], true),
            "root order must be a permutation of the vertex set"
        );
    }
    forest(g, root_order)
}

fn forest(g: &CsrGraph, root_order: &[VertexId]) -> LevelAssignment {
    const UNVISITED: u32 = u32::MAX;
    let n = g.vertex_count();
    let mut levels = vec![UNVISITED; n];
    let mut roots = Vec::new();
    let mut queue = VecDeque::new();
    for &r in root_order {
        if levels[r as usize] != UNVISITED {
            continue;
        }
        roots.push(r);
        levels[r as usize] = 0;
        queue.push_back(r);
        while let Some(u) = queue.pop_front() {
            let next = levels[u as usize] + 1;
            for &v in g.neighbors(u) {
                if levels[v as usize] == UNVISITED {
                    levels[v as usize] = next;
                    queue.push_back(v);
                }
            }
        }
    }
    LevelAssignment { levels, roots }
}

/// The split of a graph's edges into the same-level subgraph `g0` and the
/// level-spanning subgraph `g1`. Both share the original vertex set, so
/// vertex ids line up across the three graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgePartition {
    pub g0: CsrGraph,
    pub g1: CsrGraph,
}

impl EdgePartition {
    /// Percentage of edges that are horizontal: `100 * |E0| / m`, and 0 for
    /// an edgeless graph.
    pub fn horizontal_fraction(&self) -> f64 {
        let m = self.g0.edge_count() + self.g1.edge_count();
        if m == 0 {
            0.0
        } else {
            100.0 * self.g0.edge_count() as f64 / m as f64
        }
    }
}

/// Split `g`'s edges by the level assignment: equal endpoint levels go to
/// `g0`, the rest to `g1`. Panics if `levels` was computed for a different
/// vertex count.
pub fn classify_edges(g: &CsrGraph, levels: &LevelAssignment) -> EdgePartition {
    assert_eq!(
        levels.len(),
        g.vertex_count(),
        "level assignment length must match vertex count"
    );
    let mut horizontal = Vec::new();
    let mut spanning = Vec::new();
    for (u, v) in g.edges() {
        if levels.level(u) == levels.level(v) {
            horizontal.push((u, v));
        } else {
            spanning.push((u, v));
        }
    }
    EdgePartition {
        g0: CsrGraph::from_undirected_pairs(g.vertex_count(), &horizontal),
        g1: CsrGraph::from_undirected_pairs(g.vertex_count(), &spanning),
    }
}
