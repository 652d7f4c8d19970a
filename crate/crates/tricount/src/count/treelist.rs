use std::collections::VecDeque;

use crate::count::TriangleCount;
use crate::graph::{CsrGraph, VertexId};

const NO_PARENT: VertexId = VertexId::MAX;

/// Count triangles by repeated spanning-forest reduction.
///
/// Each round builds a BFS spanning forest of the residual graph. A triangle
/// that contains a tree edge must contain a non-tree edge as well (a forest
/// is acyclic), and is detected from one of its non-tree edges `(u, v)` by
/// checking whether `parent(u)` is adjacent to `v` or `parent(v)` to `u`.
/// When both endpoints share a parent the two probes would find the same
/// triangle, so the second is suppressed. Deleting the tree edges afterwards
/// destroys every counted triangle, and any triangle still intact has lost
/// no edge, so repeating until the graph is edgeless counts each triangle
/// exactly once.
pub fn treelist(g: &CsrGraph) -> TriangleCount {
    let n = g.vertex_count();
    let mut adj: Vec<Vec<VertexId>> = (0..n as VertexId).map(|v| g.neighbors(v).to_vec()).collect();
    let mut remaining = g.edge_count();
    let mut count = 0u64;
    let mut queue = VecDeque::new();
    while remaining > 0 {
        // BFS forest of the residual graph, roots in ascending id order.
        let mut parent = vec![NO_PARENT; n];
        let mut visited = vec![false; n];
        for root in 0..n {
            if visited[root] {
                continue;
            }
            visited[root] = true;
            queue.push_back(root as VertexId);
            while let Some(u) = queue.pop_front() {
                for &v in &adj[u as usize] {
                    if !visited[v as usize] {
                        visited[v as usize] = true;
                        parent[v as usize] = u;
                        queue.push_back(v);
                    }
                }
            }
        }
        // Probe every residual non-tree edge through the endpoint parents.
        for u in 0..n as VertexId {
            for &v in &adj[u as usize] {
                if u >= v {
                    continue;
                }
                let pu = parent[u as usize];
                let pv = parent[v as usize];
                if pu == v || pv == u {
                    continue; // tree edge
                }
                if pu != NO_PARENT && adj[pu as usize].binary_search(&v).is_ok() {
                    count += 1;
                }
                if pv != NO_PARENT && pv != pu && adj[pv as usize].binary_search(&u).is_ok() {
                    count += 1;
                }
            }
        }
        // Delete the tree edges.
        for child in 0..n {
            let p = parent[child];
            if p == NO_PARENT {
                continue;
            }
            remove_sorted(&mut adj[child], p);
            remove_sorted(&mut adj[p as usize], child as VertexId);
            remaining -= 1;
        }
    }
    TriangleCount(count)
}

fn remove_sorted(row: &mut Vec<VertexId>, value: VertexId) {
    let pos = row.binary_search(&value).expect("tree edge present in residual adjacency");
    row.remove(pos);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil;

    #[test]
    fn counts_known_graphs() {
        assert_eq!(treelist(&testutil::complete(4)), TriangleCount(4));
        assert_eq!(treelist(&testutil::cycle(5)), TriangleCount(0));
        assert_eq!(treelist(&testutil::path(7)), TriangleCount(0));
        assert_eq!(treelist(&testutil::karate()), TriangleCount(45));
        assert_eq!(treelist(&testutil::complete(8)), TriangleCount(56));
    }

    #[test]
    fn survives_disconnected_graphs() {
        // Two triangles in separate components plus an isolated vertex.
        let g = testutil::graph_from(&[(0, 1), (1, 2), (0, 2), (4, 5), (5, 6), (4, 6), (7, 7)]);
        assert_eq!(treelist(&g), TriangleCount(2));
    }
}
