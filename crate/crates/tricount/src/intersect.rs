//! Intersection kernels over sorted vertex-id slices.
//!
//! Every triangle counter reduces to intersecting adjacency rows; these are
//! the four interchangeable ways to do it. All kernels require strictly
//! increasing input slices (which CSR rows and forward sets guarantee) and
//! return the size of the intersection. [`merge_visit`] and
//! [`VertexHashSet::probe_visit`] additionally hand each common element to a
//! callback, for counters that filter witnesses instead of blindly counting
//! them.

use crate::graph::VertexId;

/// Two-pointer merge intersection: `O(|a| + |b|)` comparisons.
pub fn merge(a: &[VertexId], b: &[VertexId]) -> usize {
    let mut count = 0;
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let (x, y) = (a[i], b[j]);
        if x == y {
            count += 1;
        }
        i += (x <= y) as usize;
        j += (y <= x) as usize;
    }
    count
}

/// Merge intersection that calls `visit` for each common element, in
/// ascending order.
pub fn merge_visit(a: &[VertexId], b: &[VertexId], mut visit: impl FnMut(VertexId)) {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let (x, y) = (a[i], b[j]);
        if x == y {
            visit(x);
        }
        i += (x <= y) as usize;
        j += (y <= x) as usize;
    }
}

/// Probe each element of the smaller slice into the larger by binary search;
/// callers need not pre-order the arguments. `O(min log max)` comparisons.
pub fn binary_search(a: &[VertexId], b: &[VertexId]) -> usize {
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    small.iter().filter(|x| large.binary_search(x).is_ok()).count()
}

/// Recursive partition intersection: take the median of the smaller slice,
/// binary-search its position in the larger, count a hit on equality, and
/// recurse on both halves.
pub fn partition(a: &[VertexId], b: &[VertexId]) -> usize {
    if a.is_empty() || b.is_empty() {
        return 0;
    }
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let mid = small.len() / 2;
    let pivot = small[mid];
    match large.binary_search(&pivot) {
        Ok(pos) => {
            1 + partition(&small[..mid], &large[..pos])
                + partition(&small[mid + 1..], &large[pos + 1..])
        }
        Err(pos) => {
            partition(&small[..mid], &large[..pos])
                + partition(&small[mid + 1..], &large[pos..])
        }
    }
}

/// Hash-kernel intersection via a scratch [`VertexHashSet`]: load `a`, probe
/// `b`, clear. The set is left empty for reuse.
pub fn hashed(scratch: &mut VertexHashSet, a: &[VertexId], b: &[VertexId]) -> usize {
    scratch.load(a);
    let count = scratch.probe_count(b);
    scratch.clear();
    count
}

/// Dense vertex membership set with `O(touched)` clearing.
///
/// A plain `bool` per vertex plus a list of the ids currently set, so a
/// counter can reuse one allocation across millions of load/probe/clear
/// cycles and still pay only for what it touched.
#[derive(Debug)]
pub struct VertexHashSet {
    present: Vec<bool>,
    touched: Vec<VertexId>,
}

impl VertexHashSet {
    /// A set able to hold ids in `0..capacity`, initially empty.
    pub fn new(capacity: usize) -> VertexHashSet {
        VertexHashSet { present: vec![false; capacity], touched: Vec::new() }
    }

    /// Mark every id in `ids` present.
    ///
    /// # Panics
    ///
    /// Panics if the set is not empty: loading over live contents is a bug
    /// in the calling algorithm, never valid data.
    pub fn load(&mut self, ids: &[VertexId]) {
        assert!(self.touched.is_empty(), "load into non-empty VertexHashSet");
        for &v in ids {
            self.present[v as usize] = true;
            self.touched.push(v);
        }
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.present[v as usize]
    }

    /// Number of ids in `ids` currently present.
    pub fn probe_count(&self, ids: &[VertexId]) -> usize {
        ids.iter().filter(|&&v| self.present[v as usize]).count()
    }

    /// Call `visit` for each id in `ids` currently present, in `ids` order.
    pub fn probe_visit(&self, ids: &[VertexId], mut visit: impl FnMut(VertexId)) {
        for &v in ids {
            if self.present[v as usize] {
                visit(v);
            }
        }
    }

    /// Reset to all-false by walking only the touched ids.
    pub fn clear(&mut self) {
        for v in self.touched.drain(..) {
            self.present[v as usize] = false;
        }
    }

    pub fn is_empty(&self) -> bool {
        self.touched.is_empty()
    }
}
