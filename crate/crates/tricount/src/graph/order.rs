use std::cmp::Reverse;

use crate::error::{Error, Result};
use crate::graph::{CsrGraph, VertexId};

/// A vertex relabeling with its inverse.
///
/// `forward[old] = new` and `inverse[new] = old`; composing the two in either
/// order is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    forward: Vec<VertexId>,
    inverse: Vec<VertexId>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        let forward: Vec<VertexId> = (0..n as VertexId).collect();
        Permutation { inverse: forward.clone(), forward }
    }

    /// Build from a `forward` map, rejecting anything that is not a
    /// bijection on `0..len`.
    pub fn from_forward(forward: Vec<VertexId>) -> Result<Permutation> {
        let n = forward.len();
        let mut inverse = vec![VertexId::MAX; n];
        for (old, &new) in forward.iter().enumerate() {
            if new as usize >= n || inverse[new as usize] != VertexId::MAX {
                return Err(Error::InvalidGraph(format!(
                    "forward map is not a permutation at index {old}"
                )));
            }
            inverse[new as usize] = old as VertexId;
        }
        Ok(Permutation { forward, inverse })
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    /// New label of `old`.
    pub fn map(&self, old: VertexId) -> VertexId {
        self.forward[old as usize]
    }

    pub fn forward(&self) -> &[VertexId] {
        &self.forward
    }

    pub fn inverse(&self) -> &[VertexId] {
        &self.inverse
    }

    /// The permutation that undoes this one.
    pub fn inverted(&self) -> Permutation {
        Permutation { forward: self.inverse.clone(), inverse: self.forward.clone() }
    }
}

/// Relabel `g` so vertex ids run in order of decreasing degree, ties broken
/// by ascending original id. The vertex with the largest degree becomes id 0.
/// Returns the relabeled graph and the permutation that produced it.
pub fn degree_order(g: &CsrGraph) -> (CsrGraph, Permutation) {
    let n = g.vertex_count();
    let mut by_degree: Vec<VertexId> = (0..n as VertexId).collect();
    by_degree.sort_by_key(|&v| (Reverse(g.degree(v)), v));
    let mut forward = vec![0 as VertexId; n];
    for (rank, &old) in by_degree.iter().enumerate() {
        forward[old as usize] = rank as VertexId;
    }
    let perm = Permutation { forward, inverse: by_degree };
    let relabeled = permute(g, &perm);
    (relabeled, perm)
}

/// Apply a relabeling: vertex `old` becomes `perm.map(old)`, with adjacency
/// re-sorted under the new labels. The edge set is unchanged as a set.
pub fn permute(g: &CsrGraph, perm: &Permutation) -> CsrGraph {
    assert_eq!(perm.len(), g.vertex_count(), "permutation length must match vertex count");
    let mut pairs: Vec<(VertexId, VertexId)> = g
        .edges()
        .map(|(u, v)| {
            let (a, b) = (perm.map(u), perm.map(v));
            if a < b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    pairs.sort_unstable();
    CsrGraph::from_undirected_pairs(g.vertex_count(), &pairs)
}
