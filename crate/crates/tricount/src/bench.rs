//! Benchmark harness: time registered counters over a set of graphs and
//! render the results as CSV, a markdown pivot table, or JSON.
//!
//! The harness separates setup from measurement. Graph loading,
//! canonicalization, and the horizontal-edge statistic all happen untimed;
//! each timed sample is exactly one call through a [`CountFn`] pointer on an
//! already-built graph. Every run's count is recorded, and any disagreement —
//! between runs of one variant or between variants on the same graph — aborts
//! the whole benchmark with [`Error::CountMismatch`] rather than emitting a
//! table containing a wrong number.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::bfs::{bfs_forest, bfs_forest_with_roots, classify_edges};
use crate::count::{Algorithm, CountFn, TriangleCount};
use crate::error::{Error, Result};
use crate::graph::{io, CsrGraph, RmatParams, VertexId};

/// How BFS roots are chosen when computing the horizontal-edge percentage
/// reported with each graph. Counting itself is unaffected: every registered
/// variant picks its own traversal order internally.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum RootPolicy {
    /// Root each component at its smallest vertex id.
    #[default]
    AscendingId,
    /// Try vertices in order of decreasing degree (ties by id), so each
    /// component is rooted at its highest-degree vertex.
    DescendingDegree,
}

impl RootPolicy {
    /// The percentage of edges whose endpoints share a BFS level under this
    /// root policy.
    pub fn horizontal_percentage(self, g: &CsrGraph) -> f64 {
        let levels = match self {
            RootPolicy::AscendingId => bfs_forest(g),
            RootPolicy::DescendingDegree => {
                let mut roots: Vec<VertexId> = (0..g.vertex_count() as VertexId).collect();
                roots.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
                bfs_forest_with_roots(g, &roots)
            }
        };
        classify_edges(g, &levels).horizontal_fraction()
    }
}

impl FromStr for RootPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<RootPolicy> {
        match s {
            "ascending" => Ok(RootPolicy::AscendingId),
            "degree" => Ok(RootPolicy::DescendingDegree),
            other => Err(Error::Config(format!(
                "unknown root policy '{other}' (expected 'ascending' or 'degree')"
            ))),
        }
    }
}

/// Output encoding for [`emit_table`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum OutputFormat {
    /// One row per (graph, algorithm) pair.
    #[default]
    Csv,
    /// Pivot table: one row per graph, one timing column per algorithm.
    Markdown,
    /// Full records, including per-run samples and variances.
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<OutputFormat> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "markdown" => Ok(OutputFormat::Markdown),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::Config(format!(
                "unknown output format '{other}' (expected 'csv', 'markdown', or 'json')"
            ))),
        }
    }
}

/// Where a benchmark graph comes from. Parsed from spec strings: anything
/// beginning with `rmat:` configures the generator, everything else is a
/// file path.
#[derive(Debug, Clone)]
pub enum GraphSource {
    /// A file on disk, text or binary (sniffed by extension).
    Path(PathBuf),
    /// A generated recursive-matrix graph.
    Rmat(RmatParams),
    /// A graph the caller already built, with a label for the tables.
    InMemory { label: String, graph: CsrGraph },
}

impl GraphSource {
    /// Parse a spec string: `rmat:scale=10,edge_factor=16,seed=42` (with
    /// optional `a=`, `b=`, `c=`, `d=` overrides) or a plain file path.
    pub fn parse(spec: &str) -> Result<GraphSource> {
        let Some(body) = spec.strip_prefix("rmat:") else {
            return Ok(GraphSource::Path(PathBuf::from(spec)));
        };
        let mut scale = None;
        let mut edge_factor = None;
        let mut seed = None;
        let mut probs = [crate::graph::DEFAULT_A, crate::graph::DEFAULT_B, crate::graph::DEFAULT_C, crate::graph::DEFAULT_D];
        for item in body.split(',') {
            let item = item.trim();
            if item.is_empty() {
                continue;
            }
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("malformed generator field '{item}' in '{spec}'")))?;
            let bad = |what: &str| Error::Config(format!("bad {what} '{value}' in '{spec}'"));
            match key.trim() {
                "scale" => scale = Some(value.trim().parse::<u32>().map_err(|_| bad("scale"))?),
                "edge_factor" => {
                    edge_factor = Some(value.trim().parse::<u32>().map_err(|_| bad("edge_factor"))?)
                }
                "seed" => seed = Some(value.trim().parse::<u64>().map_err(|_| bad("seed"))?),
                "a" => probs[0] = value.trim().parse::<f64>().map_err(|_| bad("probability"))?,
                "b" => probs[1] = value.trim().parse::<f64>().map_err(|_| bad("probability"))?,
                "c" => probs[2] = value.trim().parse::<f64>().map_err(|_| bad("probability"))?,
                "d" => probs[3] = value.trim().parse::<f64>().map_err(|_| bad("probability"))?,
                other => {
                    return Err(Error::Config(format!(
                        "unknown generator field '{other}' in '{spec}'"
                    )))
                }
            }
        }
        let scale = scale.ok_or_else(|| Error::Config(format!("'{spec}' is missing scale=")))?;
        let edge_factor =
            edge_factor.ok_or_else(|| Error::Config(format!("'{spec}' is missing edge_factor=")))?;
        let seed = seed.ok_or_else(|| Error::Config(format!("'{spec}' is missing seed=")))?;
        let [a, b, c, d] = probs;
        let params = RmatParams::new(scale, edge_factor, seed).with_probabilities(a, b, c, d)?;
        Ok(GraphSource::Rmat(params))
    }

    /// The name used for this graph in tables.
    pub fn label(&self) -> String {
        match self {
            GraphSource::Path(p) => p
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| p.display().to_string()),
            GraphSource::Rmat(params) => {
                format!("rmat-s{}-e{}-seed{}", params.scale, params.edge_factor, params.seed)
            }
            GraphSource::InMemory { label, .. } => label.clone(),
        }
    }

    /// Produce the canonical graph (untimed).
    pub fn load(&self) -> Result<CsrGraph> {
        match self {
            GraphSource::Path(p) => io::load_graph(p),
            GraphSource::Rmat(params) => Ok(CsrGraph::from_edge_list(&params.generate()?)),
            GraphSource::InMemory { graph, .. } => Ok(graph.clone()),
        }
    }
}

/// One timed entry: a table key and the function the harness calls. The
/// registry supplies these via [`BenchEntry::for_algorithm`]; tests can
/// inject arbitrary entries, which is how the mismatch detector is itself
/// exercised.
#[derive(Debug, Clone)]
pub struct BenchEntry {
    pub key: String,
    pub run: CountFn,
}

impl BenchEntry {
    pub fn for_algorithm(algo: Algorithm) -> BenchEntry {
        BenchEntry { key: algo.key().to_string(), run: algo.count_fn() }
    }
}

/// A full benchmark request.
#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub graphs: Vec<GraphSource>,
    pub algorithms: Vec<Algorithm>,
    pub runs: usize,
    pub format: OutputFormat,
    pub root_policy: RootPolicy,
}

impl Default for BenchConfig {
    fn default() -> BenchConfig {
        BenchConfig {
            graphs: Vec::new(),
            algorithms: Algorithm::ALL.to_vec(),
            runs: 10,
            format: OutputFormat::Csv,
            root_policy: RootPolicy::AscendingId,
        }
    }
}

impl BenchConfig {
    /// Parse the `key = value` config format:
    ///
    /// ```text
    /// # lines starting with '#' are comments
    /// graph = data/karate.txt          # repeatable
    /// graph = rmat:scale=8,edge_factor=16,seed=42
    /// algorithms = F,FH,Bader          # or 'all' (the default)
    /// runs = 10
    /// format = csv                     # csv | markdown | json
    /// roots = ascending                # ascending | degree
    /// ```
    pub fn from_kv_text(text: &str) -> Result<BenchConfig> {
        let mut config = BenchConfig::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let lineno = idx + 1;
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Config(format!("line {lineno}: expected 'key = value', got '{line}'"))
            })?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "graph" => config.graphs.push(GraphSource::parse(value)?),
                "algorithms" => {
                    config.algorithms = if value == "all" {
                        Algorithm::ALL.to_vec()
                    } else {
                        value
                            .split(',')
                            .map(|k| Algorithm::from_key(k.trim()))
                            .collect::<Result<Vec<_>>>()?
                    }
                }
                "runs" => {
                    config.runs = value.parse().map_err(|_| {
                        Error::Config(format!("line {lineno}: bad runs value '{value}'"))
                    })?;
                    if config.runs == 0 {
                        return Err(Error::Config(format!("line {lineno}: runs must be at least 1")));
                    }
                }
                "format" => config.format = value.parse()?,
                "roots" => config.root_policy = value.parse()?,
                other => {
                    return Err(Error::Config(format!("line {lineno}: unknown key '{other}'")))
                }
            }
        }
        Ok(config)
    }
}

/// One (graph, algorithm) measurement. `mean_seconds` is the arithmetic mean
/// over `runs` samples; `variance_seconds` is the population variance of the
/// same samples.
#[derive(Debug, Clone, Serialize)]
pub struct BenchRecord {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub triangles: u64,
    pub k_pct: f64,
    pub algorithm: String,
    pub runs: usize,
    pub mean_seconds: f64,
    pub variance_seconds: f64,
    pub per_run_seconds: Vec<f64>,
}

/// Load every configured graph, time every configured algorithm, and return
/// one record per (graph, algorithm) pair, grouped by graph in config order.
pub fn run_bench(config: &BenchConfig) -> Result<Vec<BenchRecord>> {
    let mut graphs = Vec::with_capacity(config.graphs.len());
    for source in &config.graphs {
        graphs.push((source.label(), source.load()?));
    }
    let entries: Vec<BenchEntry> =
        config.algorithms.iter().map(|&a| BenchEntry::for_algorithm(a)).collect();
    run_bench_entries(&graphs, &entries, config.runs, config.root_policy)
}

/// The measurement core behind [`run_bench`], taking pre-built graphs and
/// explicit entries. Panics if `runs` is zero.
pub fn run_bench_entries(
    graphs: &[(String, CsrGraph)],
    entries: &[BenchEntry],
    runs: usize,
    root_policy: RootPolicy,
) -> Result<Vec<BenchRecord>> {
    assert!(runs >= 1, "at least one run per measurement");
    let mut records = Vec::with_capacity(graphs.len() * entries.len());
    for (label, g) in graphs {
        let k_pct = root_policy.horizontal_percentage(g);
        let mut agreed: Option<(String, u64)> = None;
        for entry in entries {
            let mut samples = Vec::with_capacity(runs);
            let mut count = TriangleCount(0);
            for run in 0..runs {
                let started = Instant::now();
                let this = (entry.run)(g);
                samples.push(started.elapsed().as_secs_f64());
                if run > 0 && this != count {
                    return Err(Error::CountMismatch {
                        graph: label.clone(),
                        key_a: entry.key.clone(),
                        count_a: count.0,
                        key_b: entry.key.clone(),
                        count_b: this.0,
                    });
                }
                count = this;
            }
            match &agreed {
                None => agreed = Some((entry.key.clone(), count.0)),
                Some((first_key, first_count)) => {
                    if count.0 != *first_count {
                        return Err(Error::CountMismatch {
                            graph: label.clone(),
                            key_a: first_key.clone(),
                            count_a: *first_count,
                            key_b: entry.key.clone(),
                            count_b: count.0,
                        });
                    }
                }
            }
            let mean = samples.iter().sum::<f64>() / runs as f64;
            let variance =
                samples.iter().map(|s| (s - mean) * (s - mean)).sum::<f64>() / runs as f64;
            records.push(BenchRecord {
                graph: label.clone(),
                n: g.vertex_count(),
                m: g.edge_count(),
                triangles: count.0,
                k_pct,
                algorithm: entry.key.clone(),
                runs,
                mean_seconds: mean,
                variance_seconds: variance,
                per_run_seconds: samples,
            });
        }
    }
    Ok(records)
}

/// Render records in the requested format. CSV and markdown report means
/// only; JSON carries the full records.
pub fn emit_table(records: &[BenchRecord], format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => emit_csv(records),
        OutputFormat::Markdown => emit_markdown(records),
        OutputFormat::Json => {
            serde_json::to_string_pretty(records).expect("records always serialize")
        }
    }
}

fn emit_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from("graph,n,m,triangles,k_pct,algorithm,runs,mean_seconds\n");
    for r in records {
        out += &format!(
            "{},{},{},{},{:.1},{},{},{:.6}\n",
            r.graph, r.n, r.m, r.triangles, r.k_pct, r.algorithm, r.runs, r.mean_seconds
        );
    }
    out
}

fn emit_markdown(records: &[BenchRecord]) -> String {
    let mut algos: Vec<&str> = Vec::new();
    for r in records {
        if !algos.contains(&r.algorithm.as_str()) {
            algos.push(&r.algorithm);
        }
    }
    let mut out = String::from("| graph | n | m | triangles | k% |");
    for a in &algos {
        out += &format!(" {a} |");
    }
    out += "\n|---|---|---|---|---|";
    out += &"---|".repeat(algos.len());
    out += "\n";
    // Group in first-appearance order; records arrive grouped by graph.
    let mut seen: Vec<&str> = Vec::new();
    for r in records {
        if seen.contains(&r.graph.as_str()) {
            continue;
        }
        seen.push(&r.graph);
        out += &format!("| {} | {} | {} | {} | {:.1} |", r.graph, r.n, r.m, r.triangles, r.k_pct);
        for a in &algos {
            let cell = records
                .iter()
                .find(|c| c.graph == r.graph && c.algorithm == *a)
                .map(|c| format!("{:.6}", c.mean_seconds))
                .unwrap_or_default();
            out += &format!(" {cell} |");
        }
        out += "\n";
    }
    out
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Markdown => "markdown",
            OutputFormat::Json => "json",
        })
    }
}
