//! Graph representations and constructors.
//!
//! The pipeline is: obtain an [`EdgeList`] (from a text file, the RMAT
//! generator, or in-memory pairs), canonicalize it into a [`CsrGraph`], and
//! optionally relabel with [`degree_order`] or persist with [`io::save_binary`].

mod csr;
mod edge_list;
pub mod io;
mod order;
mod rmat;

pub use csr::{CsrGraph, GraphStats};
pub use edge_list::EdgeList;
pub use order::{degree_order, permute, Permutation};
pub use rmat::{RmatParams, DEFAULT_A, DEFAULT_B, DEFAULT_C, DEFAULT_D};

/// Vertex identifier. Graphs are limited to `u32::MAX` vertices, which keeps
/// adjacency arrays compact without constraining any workload this crate
/// targets.
pub type VertexId = u32;
