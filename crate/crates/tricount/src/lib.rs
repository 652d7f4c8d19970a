//! Sequential triangle counting over sparse undirected graphs.
//!
//! The crate bundles a family of exact triangle counting algorithms that all
//! operate on one immutable [`CsrGraph`] representation, together with the
//! plumbing needed to compare them fairly:
//!
//! * [`graph`] — edge lists, CSR construction, degree reordering, an RMAT
//!   generator, and a binary on-disk cache.
//! * [`intersect`] — the sorted-set intersection kernels (merge, binary
//!   search, recursive partition, hashing) the counters are built from.
//! * [`bfs`] — whole-graph BFS level assignment and the split of edges into
//!   same-level and level-spanning subgraphs.
//! * [`count`] — the counting algorithms themselves, from an `O(n^3)`
//!   reference check up to the hybrid counter, all behind a string-keyed
//!   [`Algorithm`] registry.
//! * [`bench`] — a harness that times the registered algorithms over a set
//!   of graphs and renders CSV, Markdown, or JSON tables.
//!
//! Everything is single-threaded and deterministic: a fixed seed fully
//! determines generated graphs, and every algorithm returns the exact same
//! [`TriangleCount`] for the same input.
//!
//! ```
//! use tricount::{Algorithm, CsrGraph, EdgeList};
//!
//! // The complete graph on four vertices contains four triangles.
//! let el = EdgeList::from_pairs([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
//! let g = CsrGraph::from_edge_list(&el);
//! for algo in Algorithm::ALL {
//!     assert_eq!(algo.count(&g).0, 4, "{algo} disagrees");
//! }
//! ```

pub mod bench;
pub mod bfs;
pub mod count;
mod error;
pub mod graph;
pub mod guide;
pub mod intersect;

pub use count::{Algorithm, TriangleCount};
pub use error::{Error, Result};
pub use graph::{
    degree_order, CsrGraph, EdgeList, GraphStats, Permutation, RmatParams, VertexId,
};
