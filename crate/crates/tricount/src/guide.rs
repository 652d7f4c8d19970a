//! The user guide, one module per chapter.
//!
//! Each module's documentation *is* the corresponding chapter of the mdbook
//! under `book/` — included verbatim at compile time — so `cargo test`
//! compiles and runs every example in the book. The rendered book and the
//! rendered rustdoc can therefore never drift apart: there is one source.
//!
//! Build the standalone book with `mdbook build book/`.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/csr.md")]
pub mod csr {}

#[doc = include_str!("../../../book/src/intersection.md")]
pub mod intersection {}

#[doc = include_str!("../../../book/src/iterators.md")]
pub mod iterators {}

#[doc = include_str!("../../../book/src/forward.md")]
pub mod forward {}

#[doc = include_str!("../../../book/src/cover-edges.md")]
pub mod cover_edges {}

#[doc = include_str!("../../../book/src/hybrid.md")]
pub mod hybrid {}

#[doc = include_str!("../../../book/src/rmat.md")]
pub mod rmat {}

#[doc = include_str!("../../../book/src/benchmarking.md")]
pub mod benchmarking {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
