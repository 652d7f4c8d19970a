//! `tricount`: count triangles, inspect graphs, generate RMAT inputs, and
//! benchmark the counting algorithms.
//!
//! Exit codes: 0 success; 1 input could not be read or parsed; 2 bad usage
//! or configuration; 3 algorithms disagreed during a benchmark.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use tricount::bench::{emit_table, run_bench, BenchConfig, GraphSource};
use tricount::graph::io::{self, FileFormat};
use tricount::graph::{DEFAULT_A, DEFAULT_B, DEFAULT_C, DEFAULT_D};
use tricount::{Algorithm, CsrGraph, Error, RmatParams};

#[derive(Parser)]
#[command(name = "tricount", version, about = "Exact triangle counting toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    /// Whitespace-separated `u v` pairs, `#` comments.
    Text,
    /// The binary CSR cache format.
    Binary,
}

impl From<FormatArg> for FileFormat {
    fn from(f: FormatArg) -> FileFormat {
        match f {
            FormatArg::Text => FileFormat::SnapText,
            FormatArg::Binary => FileFormat::BinaryCsr,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Count the triangles in one graph and print the number.
    Count {
        /// Graph file; `.bin` is read as binary CSR, anything else as text.
        path: PathBuf,
        /// Algorithm key (pass an unknown key to see the registry).
        #[arg(long, default_value = "Bader")]
        algo: String,
        /// Override input-format sniffing.
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
    },
    /// Print a graph's vertex count, edge count, max degree, and the
    /// percentage of edges that are horizontal under a BFS.
    Info {
        /// Graph file; `.bin` is read as binary CSR, anything else as text.
        path: PathBuf,
        /// Override input-format sniffing.
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
        /// BFS root policy for the horizontal percentage: `ascending` or
        /// `degree`.
        #[arg(long, default_value = "ascending")]
        roots: String,
    },
    /// Generate an RMAT graph. A `.bin` output gets the canonical binary
    /// CSR; any other extension gets the raw generated pairs as text.
    GenRmat {
        /// Output file.
        out: PathBuf,
        /// log2 of the vertex count.
        #[arg(long)]
        scale: u32,
        /// Raw pairs generated per vertex.
        #[arg(long, default_value_t = 16)]
        edge_factor: u32,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Quadrant probabilities; must sum to 1.
        #[arg(long, default_value_t = DEFAULT_A)]
        a: f64,
        #[arg(long, default_value_t = DEFAULT_B)]
        b: f64,
        #[arg(long, default_value_t = DEFAULT_C)]
        c: f64,
        #[arg(long, default_value_t = DEFAULT_D)]
        d: f64,
    },
    /// Time algorithms across graphs and print a results table.
    Bench {
        /// `key = value` config file; flags below override it.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Add a graph: a file path or `rmat:scale=..,edge_factor=..,seed=..`.
        /// Repeatable.
        #[arg(long = "graph")]
        graphs: Vec<String>,
        /// Comma-separated algorithm keys, or `all`.
        #[arg(long)]
        algorithms: Option<String>,
        /// Timed runs per (graph, algorithm) pair.
        #[arg(long)]
        runs: Option<usize>,
        /// Table format: `csv`, `markdown`, or `json`.
        #[arg(long)]
        format: Option<String>,
        /// BFS root policy for the reported horizontal percentage:
        /// `ascending` or `degree`.
        #[arg(long)]
        roots: Option<String>,
        /// Write the table to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            if matches!(err, Error::UnknownAlgorithm(_)) {
                eprintln!("known algorithms:");
                for algo in Algorithm::ALL {
                    eprintln!("  {:<8} {}", algo.key(), algo.describe());
                }
            }
            match err {
                Error::Io(_) | Error::Parse { .. } | Error::InvalidGraph(_) => ExitCode::from(1),
                Error::CountMismatch { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn load(path: &Path, format: Option<FormatArg>) -> Result<CsrGraph, Error> {
    match format {
        Some(f) => io::load_graph_as(path, f.into()),
        None => io::load_graph(path),
    }
}

fn run(command: Command) -> Result<(), Error> {
    match command {
        Command::Count { path, algo, format } => {
            let algo = Algorithm::from_key(&algo)?;
            let g = load(&path, format)?;
            println!("{}", algo.count(&g));
            Ok(())
        }
        Command::Info { path, format, roots } => {
            let policy: tricount::bench::RootPolicy = roots.parse()?;
            let g = load(&path, format)?;
            let stats = g.stats();
            let k = policy.horizontal_percentage(&g);
            println!("n={} m={} d_max={} k={:.1}%", stats.n, stats.m, stats.d_max, k);
            Ok(())
        }
        Command::GenRmat { out, scale, edge_factor, seed, a, b, c, d } => {
            let params = RmatParams::new(scale, edge_factor, seed).with_probabilities(a, b, c, d)?;
            let raw = params.generate()?;
            if out.extension().is_some_and(|e| e == "bin") {
                let g = CsrGraph::from_edge_list(&raw);
                io::save_binary(&g, &out)?;
                eprintln!(
                    "generated {} raw pairs; canonical graph n={} m={} -> {}",
                    raw.len(),
                    g.vertex_count(),
                    g.edge_count(),
                    out.display()
                );
            } else {
                let mut file = std::io::BufWriter::new(fs::File::create(&out)?);
                raw.write_snap(&mut file)?;
                file.flush()?;
                eprintln!("generated {} raw pairs -> {}", raw.len(), out.display());
            }
            Ok(())
        }
        Command::Bench { config, graphs, algorithms, runs, format, roots, out } => {
            let mut bench = match config {
                Some(path) => BenchConfig::from_kv_text(&fs::read_to_string(path)?)?,
                None => BenchConfig::default(),
            };
            for spec in &graphs {
                bench.graphs.push(GraphSource::parse(spec)?);
            }
            if let Some(keys) = algorithms {
                bench.algorithms = if keys == "all" {
                    Algorithm::ALL.to_vec()
                } else {
                    keys.split(',')
                        .map(|k| Algorithm::from_key(k.trim()))
                        .collect::<Result<Vec<_>, _>>()?
                };
            }
            if let Some(n) = runs {
                if n == 0 {
                    return Err(Error::Config("runs must be at least 1".into()));
                }
                bench.runs = n;
            }
            if let Some(f) = format {
                bench.format = f.parse()?;
            }
            if let Some(r) = roots {
                bench.root_policy = r.parse()?;
            }
            if bench.graphs.is_empty() {
                return Err(Error::Config(
                    "no graphs: pass --graph or a config file with graph lines".into(),
                ));
            }
            let records = run_bench(&bench)?;
            let table = emit_table(&records, bench.format);
            match out {
                Some(path) => fs::write(path, table)?,
                None => print!("{table}"),
            }
            Ok(())
        }
    }
}
