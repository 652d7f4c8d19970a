//! Exact triangle counting algorithms.
//!
//! All counters take the same immutable [`CsrGraph`] and return the same
//! [`TriangleCount`]; they differ only in traversal strategy and set
//! intersection kernel. The registry enum [`Algorithm`] exposes the
//! benchmarked variants behind stable string keys:
//!
//! | key | variant |
//! |-----|---------|
//! | `IR` | repeated spanning-forest reduction |
//! | `V`, `VD` | vertex iterator, plain / direction-oriented |
//! | `EM`, `EMD` | edge iterator, merge kernel, plain / direction-oriented |
//! | `EB`, `EBD` | edge iterator, binary-search kernel |
//! | `EP`, `EPD` | edge iterator, partition kernel |
//! | `EH`, `EHD` | edge iterator, hash kernel |
//! | `F` | forward |
//! | `FH`, `FHD` | forward-hashed, plain / degree-ordered |
//! | `TS` | lower-triangular row merge |
//! | `LA` | row-by-row hashed prefix counting |
//! | `CE`, `CED` | cover-edge counter, plain / degree-ordered |
//! | `Bader`, `BaderD` | hybrid cover-edge + forward-hashed counter |
//!
//! Plain iterator variants enumerate both directions of every candidate and
//! divide the raw sum by 6. Direction-oriented edge iterators visit each
//! edge once by id order and divide by 3 (one hit per triangle edge); the
//! direction-oriented vertex iterator pins each triangle to its smallest
//! vertex, and the forward, cover-edge, and hybrid families pin a unique
//! representative too, so none of those divide at all.

mod brute;
mod cover_edge;
mod edge_iter;
mod fast;
mod forward;
mod linalg;
mod tri_simple;
mod treelist;
mod vertex_iter;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::CsrGraph;

pub use brute::brute_force;
pub use cover_edge::cover_edge;
pub use edge_iter::{edge_iterator, Kernel};
pub use fast::{fast, fast_instrumented, FastStats};
pub use forward::{forward, forward_hashed, ForwardSets};
pub use linalg::linear_algebra;
pub use tri_simple::tri_simple;
pub use treelist::treelist;
pub use vertex_iter::vertex_iterator;

/// Number of unordered vertex triples whose three connecting edges all
/// exist. Always at most `C(n, 3)`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TriangleCount(pub u64);

impl fmt::Display for TriangleCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Signature shared by every registered counter, and by anything the
/// benchmark harness is asked to time: the callee receives only a borrowed
/// graph, so construction cost can never hide inside the timed region.
pub type CountFn = fn(&CsrGraph) -> TriangleCount;

/// The registry of benchmarked counting variants, keyed by the names used in
/// result tables and on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Ir,
    V,
    Vd,
    Em,
    Emd,
    Eb,
    Ebd,
    Ep,
    Epd,
    Eh,
    Ehd,
    F,
    Fh,
    Fhd,
    Ts,
    La,
    Ce,
    Ced,
    Bader,
    BaderD,
}

impl Algorithm {
    pub const ALL: [Algorithm; 20] = [
        Algorithm::Ir,
        Algorithm::V,
        Algorithm::Vd,
        Algorithm::Em,
        Algorithm::Emd,
        Algorithm::Eb,
        Algorithm::Ebd,
        Algorithm::Ep,
        Algorithm::Epd,
        Algorithm::Eh,
        Algorithm::Ehd,
        Algorithm::F,
        Algorithm::Fh,
        Algorithm::Fhd,
        Algorithm::Ts,
        Algorithm::La,
        Algorithm::Ce,
        Algorithm::Ced,
        Algorithm::Bader,
        Algorithm::BaderD,
    ];

    /// Stable table key.
    pub fn key(self) -> &'static str {
        match self {
            Algorithm::Ir => "IR",
            Algorithm::V => "V",
            Algorithm::Vd => "VD",
            Algorithm::Em => "EM",
            Algorithm::Emd => "EMD",
            Algorithm::Eb => "EB",
            Algorithm::Ebd => "EBD",
            Algorithm::Ep => "EP",
            Algorithm::Epd => "EPD",
            Algorithm::Eh => "EH",
            Algorithm::Ehd => "EHD",
            Algorithm::F => "F",
            Algorithm::Fh => "FH",
            Algorithm::Fhd => "FHD",
            Algorithm::Ts => "TS",
            Algorithm::La => "LA",
            Algorithm::Ce => "CE",
            Algorithm::Ced => "CED",
            Algorithm::Bader => "Bader",
            Algorithm::BaderD => "BaderD",
        }
    }

    /// One-line description for listings.
    pub fn describe(self) -> &'static str {
        match self {
            Algorithm::Ir => "repeated spanning-forest reduction",
            Algorithm::V => "vertex iterator",
            Algorithm::Vd => "vertex iterator, direction-oriented",
            Algorithm::Em => "edge iterator, merge kernel",
            Algorithm::Emd => "edge iterator, merge kernel, direction-oriented",
            Algorithm::Eb => "edge iterator, binary-search kernel",
            Algorithm::Ebd => "edge iterator, binary-search kernel, direction-oriented",
            Algorithm::Ep => "edge iterator, partition kernel",
            Algorithm::Epd => "edge iterator, partition kernel, direction-oriented",
            Algorithm::Eh => "edge iterator, hash kernel",
            Algorithm::Ehd => "edge iterator, hash kernel, direction-oriented",
            Algorithm::F => "forward",
            Algorithm::Fh => "forward-hashed",
            Algorithm::Fhd => "forward-hashed with degree ordering",
            Algorithm::Ts => "lower-triangular row merge",
            Algorithm::La => "row-by-row hashed prefix counting",
            Algorithm::Ce => "cover-edge counter",
            Algorithm::Ced => "cover-edge counter with degree ordering",
            Algorithm::Bader => "hybrid cover-edge and forward-hashed counter",
            Algorithm::BaderD => "hybrid counter with degree ordering",
        }
    }

    pub fn from_key(key: &str) -> Result<Algorithm> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.key() == key)
            .ok_or_else(|| Error::UnknownAlgorithm(key.to_string()))
    }

    /// Run this variant on `g`.
    pub fn count(self, g: &CsrGraph) -> TriangleCount {
        self.count_fn()(g)
    }

    /// The variant as a plain function pointer, as the benchmark harness
    /// consumes it.
    pub fn count_fn(self) -> CountFn {
        match self {
            Algorithm::Ir => treelist,
            Algorithm::V => |g| vertex_iterator(g, false),
            Algorithm::Vd => |g| vertex_iterator(g, true),
            Algorithm::Em => |g| edge_iterator(g, Kernel::Merge, false),
            Algorithm::Emd => |g| edge_iterator(g, Kernel::Merge, true),
            Algorithm::Eb => |g| edge_iterator(g, Kernel::Binary, false),
            Algorithm::Ebd => |g| edge_iterator(g, Kernel::Binary, true),
            Algorithm::Ep => |g| edge_iterator(g, Kernel::Partition, false),
            Algorithm::Epd => |g| edge_iterator(g, Kernel::Partition, true),
            Algorithm::Eh => |g| edge_iterator(g, Kernel::Hash, false),
            Algorithm::Ehd => |g| edge_iterator(g, Kernel::Hash, true),
            Algorithm::F => forward,
            Algorithm::Fh => |g| forward_hashed(g, false),
            Algorithm::Fhd => |g| forward_hashed(g, true),
            Algorithm::Ts => tri_simple,
            Algorithm::La => linear_algebra,
            Algorithm::Ce => |g| cover_edge(g, false),
            Algorithm::Ced => |g| cover_edge(g, true),
            Algorithm::Bader => |g| fast(g, false),
            Algorithm::BaderD => |g| fast(g, true),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Algorithm> {
        Algorithm::from_key(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil;

    #[test]
    fn registry_keys_round_trip() {
        let keys = [
            "IR", "V", "VD", "EM", "EMD", "EB", "EBD", "EP", "EPD", "EH", "EHD", "F", "FH",
            "FHD", "TS", "LA", "CE", "CED", "Bader", "BaderD",
        ];
        assert_eq!(Algorithm::ALL.len(), keys.len());
        for (algo, key) in Algorithm::ALL.into_iter().zip(keys) {
            assert_eq!(algo.key(), key);
            assert_eq!(Algorithm::from_key(key).unwrap(), algo);
            assert_eq!(key.parse::<Algorithm>().unwrap(), algo);
        }
    }

    #[test]
    fn unknown_key_is_an_error() {
        let err = Algorithm::from_key("fh").unwrap_err();
        assert!(matches!(err, Error::UnknownAlgorithm(_)), "{err}");
    }

    #[test]
    fn every_variant_counts_karate_exactly() {
        let g = testutil::karate();
        for algo in Algorithm::ALL {
            assert_eq!(algo.count(&g), TriangleCount(45), "{algo}");
        }
    }

    #[test]
    fn every_variant_handles_tiny_graphs() {
        let empty = crate::CsrGraph::from_edge_list(&crate::EdgeList::with_hint(0));
        let lone = crate::CsrGraph::from_edge_list(&crate::EdgeList::with_hint(1));
        let k3 = testutil::complete(3);
        for algo in Algorithm::ALL {
            assert_eq!(algo.count(&empty), TriangleCount(0), "{algo} on empty");
            assert_eq!(algo.count(&lone), TriangleCount(0), "{algo} on K1");
            assert_eq!(algo.count(&k3), TriangleCount(1), "{algo} on K3");
        }
    }
}
