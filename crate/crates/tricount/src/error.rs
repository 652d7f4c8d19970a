use std::io;

/// Errors surfaced by graph loading, generation, configuration, and
/// benchmarking.
///
/// Violations of in-process call contracts (for example handing
/// [`crate::bfs::classify_edges`] a level array of the wrong length) are
/// panics, not `Error` values: they indicate caller bugs rather than bad
/// input data.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A text edge list contained a line that could not be interpreted.
    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("i/o error: {0}")]
    Io(#[from] io::Error),

    /// A binary graph file was structurally unsound.
    #[error("invalid graph data: {0}")]
    InvalidGraph(String),

    /// A generator scale that does not fit the 32-bit vertex id space.
    #[error("scale {scale} exceeds the 32-bit vertex id space")]
    Capacity { scale: u32 },

    /// Generator parameters outside their documented domain.
    #[error("invalid generator parameters: {0}")]
    Params(String),

    #[error("unknown algorithm key '{0}'")]
    UnknownAlgorithm(String),

    #[error("config error: {0}")]
    Config(String),

    /// Two algorithms disagreed on the same graph; the benchmark that saw
    /// this must not emit a table.
    #[error("triangle count mismatch on '{graph}': {key_a} found {count_a}, {key_b} found {count_b}")]
    CountMismatch {
        graph: String,
        key_a: String,
        count_a: u64,
        key_b: String,
        count_b: u64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
