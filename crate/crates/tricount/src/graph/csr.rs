use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{EdgeList, VertexId};

/// Immutable undirected graph in compressed sparse row form.
///
/// Invariants, established at construction and relied on by every counting
/// algorithm:
///
/// * `offsets` has length `n + 1`, is nondecreasing, starts at 0, ends at `2m`;
/// * each adjacency row is strictly increasing (sorted, duplicate-free);
/// * no self-loops;
/// * symmetric: `v ∈ N(u)` iff `u ∈ N(v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsrGraph {
    n: usize,
    m: usize,
    offsets: Vec<usize>,
    neighbors: Vec<VertexId>,
}

impl CsrGraph {
    /// Canonicalize an edge list into CSR form: self-loops are dropped,
    /// duplicates and reversed repeats collapse to one undirected edge, and
    /// both directions of every surviving edge are stored with sorted rows.
    ///
    /// The vertex count is `1 + max id` over the raw list (so a self-loop
    /// still names its vertex), or `n_hint` if that is larger.
    pub fn from_edge_list(el: &EdgeList) -> CsrGraph {
        let mut n = el.n_hint;
        for &(u, v) in &el.edges {
            n = n.max(u as usize + 1).max(v as usize + 1);
        }
        let mut pairs: Vec<(VertexId, VertexId)> = el
            .edges
            .iter()
            .filter(|(u, v)| u != v)
            .map(|&(u, v)| if u < v { (u, v) } else { (v, u) })
            .collect();
        pairs.sort_unstable();
        pairs.dedup();
        Self::from_undirected_pairs(n, &pairs)
    }

    /// Build from canonical pairs: sorted, unique, `u < v`, ids below `n`.
    ///
    /// Rows come out sorted without a per-row sort: scanning pairs in
    /// lexicographic order appends to row `u` first all smaller endpoints in
    /// increasing order, then all larger ones in increasing order.
    pub(crate) fn from_undirected_pairs(n: usize, pairs: &[(VertexId, VertexId)]) -> CsrGraph {
        assert!(n <= VertexId::MAX as usize, "vertex count exceeds id space");
        let m = pairs.len();
        let mut offsets = vec![0usize; n + 1];
        for &(u, v) in pairs {
            offsets[u as usize + 1] += 1;
            offsets[v as usize + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut cursor = offsets[..n].to_vec();
        let mut neighbors = vec![0 as VertexId; 2 * m];
        for &(u, v) in pairs {
            neighbors[cursor[u as usize]] = v;
            cursor[u as usize] += 1;
            neighbors[cursor[v as usize]] = u;
            cursor[v as usize] += 1;
        }
        CsrGraph { n, m, offsets, neighbors }
    }

    /// Reassemble a graph from raw arrays, validating every invariant.
    /// Used by the binary cache loader; rejects structurally unsound data
    /// with [`Error::InvalidGraph`].
    pub fn from_raw_parts(
        n: usize,
        m: usize,
        offsets: Vec<usize>,
        neighbors: Vec<VertexId>,
    ) -> Result<CsrGraph> {
        let g = CsrGraph { n, m, offsets, neighbors };
        g.validate()?;
        Ok(g)
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of undirected edges.
    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.offsets[v as usize + 1] - self.offsets[v as usize]
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.neighbors[self.offsets[v as usize]..self.offsets[v as usize + 1]]
    }

    /// Membership test by binary search on the sorted row of `u`.
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n as VertexId).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Each undirected edge once, as `(u, v)` with `u < v`, in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        (0..self.n as VertexId).flat_map(move |u| {
            self.neighbors(u).iter().filter(move |&&v| u < v).map(move |&v| (u, v))
        })
    }

    pub fn to_edge_list(&self) -> EdgeList {
        EdgeList { n_hint: self.n, edges: self.edges().collect() }
    }

    pub fn stats(&self) -> GraphStats {
        let mut histogram = BTreeMap::new();
        for v in 0..self.n as VertexId {
            *histogram.entry(self.degree(v)).or_insert(0usize) += 1;
        }
        GraphStats {
            n: self.n,
            m: self.m,
            d_max: self.max_degree(),
            degree_histogram: histogram,
        }
    }

    /// Full invariant scan; cheap enough to run on every binary load.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidGraph(msg));
        if self.offsets.len() != self.n + 1 {
            return fail(format!(
                "offset array has length {}, expected {}",
                self.offsets.len(),
                self.n + 1
            ));
        }
        if self.offsets[0] != 0 || self.offsets[self.n] != 2 * self.m {
            return fail("offsets must start at 0 and end at 2m".into());
        }
        if self.neighbors.len() != 2 * self.m {
            return fail("neighbor array length is not 2m".into());
        }
        for v in 0..self.n {
            if self.offsets[v] > self.offsets[v + 1] {
                return fail(format!("offsets decrease at vertex {v}"));
            }
            let row = &self.neighbors[self.offsets[v]..self.offsets[v + 1]];
            for (i, &w) in row.iter().enumerate() {
                if w as usize >= self.n {
                    return fail(format!("vertex {v} lists out-of-range neighbor {w}"));
                }
                if w as usize == v {
                    return fail(format!("vertex {v} has a self-loop"));
                }
                if i > 0 && row[i - 1] >= w {
                    return fail(format!("adjacency of vertex {v} is not strictly increasing"));
                }
            }
        }
        for v in 0..self.n as VertexId {
            for &w in self.neighbors(v) {
                if !self.has_edge(w, v) {
                    return fail(format!("edge ({v}, {w}) has no reverse entry"));
                }
            }
        }
        Ok(())
    }

    pub(crate) fn raw_offsets(&self) -> &[usize] {
        &self.offsets
    }

    pub(crate) fn raw_neighbors(&self) -> &[VertexId] {
        &self.neighbors
    }
}

/// Summary statistics as printed by `info` and the benchmark tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphStats {
    pub n: usize,
    pub m: usize,
    pub d_max: usize,
    /// Degree value to number of vertices with that degree.
    pub degree_histogram: BTreeMap<usize, usize>,
}
