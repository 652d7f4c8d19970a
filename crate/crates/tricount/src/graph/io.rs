//! On-disk graph formats.
//!
//! Two formats are supported: the text edge list handled by
//! [`EdgeList::parse_snap`], and a little-endian binary CSR cache that
//! round-trips a [`CsrGraph`] bit-exactly. The binary layout is:
//!
//! ```text
//! magic   4 bytes  "TCSR"
//! version u32      currently 1
//! n       u64      vertex count
//! m       u64      undirected edge count
//! offsets (n+1) x u64
//! neighbors (2m) x u64
//! ```

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{CsrGraph, EdgeList, VertexId};

pub const MAGIC: [u8; 4] = *b"TCSR";
pub const VERSION: u32 = 1;

/// How a graph file's bytes should be interpreted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FileFormat {
    SnapText,
    BinaryCsr,
}

impl FileFormat {
    /// Pick a format from the file extension: `.bin` means binary CSR,
    /// anything else is a text edge list.
    pub fn sniff(path: &Path) -> FileFormat {
        match path.extension().and_then(|e| e.to_str()) {
            Some("bin") => FileFormat::BinaryCsr,
            _ => FileFormat::SnapText,
        }
    }
}

/// Serialize in the binary CSR layout.
pub fn write_csr<W: Write>(g: &CsrGraph, mut w: W) -> Result<()> {
    w.write_all(&MAGIC)?;
    w.write_all(&VERSION.to_le_bytes())?;
    w.write_all(&(g.vertex_count() as u64).to_le_bytes())?;
    w.write_all(&(g.edge_count() as u64).to_le_bytes())?;
    let mut buf = Vec::with_capacity(8 * 1024);
    for &off in g.raw_offsets() {
        buf.extend_from_slice(&(off as u64).to_le_bytes());
        flush_if_full(&mut buf, &mut w)?;
    }
    for &v in g.raw_neighbors() {
        buf.extend_from_slice(&(v as u64).to_le_bytes());
        flush_if_full(&mut buf, &mut w)?;
    }
    w.write_all(&buf)?;
    Ok(())
}

fn flush_if_full<W: Write>(buf: &mut Vec<u8>, w: &mut W) -> Result<()> {
    if buf.len() >= 8 * 1024 {
        w.write_all(buf)?;
        buf.clear();
    }
    Ok(())
}

/// Deserialize and fully validate a binary CSR file.
pub fn read_csr<R: Read>(mut r: R) -> Result<CsrGraph> {
    let mut magic = [0u8; 4];
    r.read_exact(&mut magic)?;
    if magic != MAGIC {
        return Err(Error::InvalidGraph("bad magic; not a binary CSR file".into()));
    }
    let version = read_u32(&mut r)?;
    if version != VERSION {
        return Err(Error::InvalidGraph(format!("unsupported version {version}")));
    }
    let n = read_u64(&mut r)? as usize;
    let m = read_u64(&mut r)? as usize;
    let mut offsets = Vec::with_capacity(n + 1);
    for _ in 0..n + 1 {
        offsets.push(read_u64(&mut r)? as usize);
    }
    let mut neighbors = Vec::with_capacity(2 * m);
    for _ in 0..2 * m {
        let v = read_u64(&mut r)?;
        if v > VertexId::MAX as u64 {
            return Err(Error::InvalidGraph(format!("neighbor id {v} out of range")));
        }
        neighbors.push(v as VertexId);
    }
    CsrGraph::from_raw_parts(n, m, offsets, neighbors)
}

fn read_u32<R: Read>(r: &mut R) -> Result<u32> {
    let mut b = [0u8; 4];
    r.read_exact(&mut b)?;
    Ok(u32::from_le_bytes(b))
}

fn read_u64<R: Read>(r: &mut R) -> Result<u64> {
    let mut b = [0u8; 8];
    r.read_exact(&mut b)?;
    Ok(u64::from_le_bytes(b))
}

pub fn save_binary<P: AsRef<Path>>(g: &CsrGraph, path: P) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    write_csr(g, &mut w)?;
    w.flush()?;
    Ok(())
}

pub fn load_binary<P: AsRef<Path>>(path: P) -> Result<CsrGraph> {
    read_csr(BufReader::new(File::open(path)?))
}

/// Load a graph file in an explicit format.
pub fn load_graph_as<P: AsRef<Path>>(path: P, format: FileFormat) -> Result<CsrGraph> {
    match format {
        FileFormat::SnapText => {
            Ok(CsrGraph::from_edge_list(&EdgeList::from_snap_path(path)?))
        }
        FileFormat::BinaryCsr => load_binary(path),
    }
}

/// Load a graph file, picking the format from the extension.
pub fn load_graph<P: AsRef<Path>>(path: P) -> Result<CsrGraph> {
    let format = FileFormat::sniff(path.as_ref());
    load_graph_as(path, format)
}
