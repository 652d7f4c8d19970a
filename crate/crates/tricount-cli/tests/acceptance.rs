//! The acceptance gate: ten end-to-end checks over the whole toolkit, each
//! printing one `[acceptance] criterion N (...): PASS|FAIL` line (visible
//! under `cargo test -- --nocapture`, or on failure).
//!
//! The sweep corpus backing most criteria is built once: 512 Erdős–Rényi
//! graphs (n = 1..=64 across eight densities), 25 small-world generated
//! graphs (scales 4..=8, five seeds each), and 18 structured fixtures —
//! 555 graphs in all, every one small enough to verify against the
//! brute-force oracle.

use std::process::Command;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tricount::bench::{
    run_bench, run_bench_entries, BenchConfig, BenchEntry, GraphSource, OutputFormat, RootPolicy,
};
use tricount::bfs::{bfs_forest, classify_edges};
use tricount::count::{brute_force, fast_instrumented, TriangleCount};
use tricount::graph::permute;
use tricount::{Algorithm, CsrGraph, EdgeList, Error, Permutation, RmatParams, VertexId};

const KARATE: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/karate.txt");

fn report(number: usize, title: &str, pass: bool, detail: &str) {
    let verdict = if pass { "PASS" } else { "FAIL" };
    println!("[acceptance] criterion {number} ({title}): {verdict} — {detail}");
    assert!(pass, "criterion {number} ({title}): {detail}");
}

// ---- fixtures ----------------------------------------------------------

fn graph_from(n_hint: usize, pairs: &[(u32, u32)]) -> CsrGraph {
    let mut el = EdgeList::from_pairs(pairs.iter().copied());
    el.n_hint = n_hint;
    CsrGraph::from_edge_list(&el)
}

fn complete(n: u32) -> CsrGraph {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    graph_from(n as usize, &pairs)
}

fn path(n: u32) -> CsrGraph {
    graph_from(n as usize, &(1..n).map(|v| (v - 1, v)).collect::<Vec<_>>())
}

fn cycle(n: u32) -> CsrGraph {
    let mut pairs: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    pairs.push((0, n - 1));
    graph_from(n as usize, &pairs)
}

fn star(leaves: u32) -> CsrGraph {
    graph_from(leaves as usize + 1, &(1..=leaves).map(|v| (0, v)).collect::<Vec<_>>())
}

fn bipartite(a: u32, b: u32) -> CsrGraph {
    let mut pairs = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            pairs.push((u, v));
        }
    }
    graph_from((a + b) as usize, &pairs)
}

fn wheel(rim: u32) -> CsrGraph {
    let mut pairs: Vec<_> = (1..=rim).map(|v| (0, v)).collect();
    for v in 1..rim {
        pairs.push((v, v + 1));
    }
    pairs.push((1, rim));
    graph_from(rim as usize + 1, &pairs)
}

fn lollipop() -> CsrGraph {
    let mut pairs = Vec::new();
    for u in 0..6 {
        for v in u + 1..6 {
            pairs.push((u, v));
        }
    }
    pairs.extend([(5, 6), (6, 7), (7, 8), (8, 9)]);
    graph_from(10, &pairs)
}

fn karate() -> CsrGraph {
    CsrGraph::from_edge_list(&EdgeList::from_snap_path(KARATE).expect("bundled karate graph"))
}

fn unit(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

fn erdos_renyi(n: u32, p: f64, seed: u64) -> CsrGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut el = EdgeList::with_hint(n as usize);
    for u in 0..n {
        for v in u + 1..n {
            if unit(&mut rng) < p {
                el.push(u, v);
            }
        }
    }
    CsrGraph::from_edge_list(&el)
}

/// Square grid (`side * side` vertices, row-major ids) plus a diagonal in
/// every cell whose lower-left corner has both coordinates ≡ 1 mod
/// `spacing`. Diagonals are the only triangle sources: each closes exactly
/// two, and `spacing >= 3` keeps them too far apart to interact. Returns
/// the graph and the number of diagonals.
fn grid_with_diagonals(side: u32, spacing: u32) -> (CsrGraph, usize) {
    assert!(spacing >= 3);
    let id = |x: u32, y: u32| y * side + x;
    let mut pairs = Vec::new();
    let mut diagonals = 0usize;
    for y in 0..side {
        for x in 0..side {
            if x + 1 < side {
                pairs.push((id(x, y), id(x + 1, y)));
            }
            if y + 1 < side {
                pairs.push((id(x, y), id(x, y + 1)));
            }
            if x % spacing == 1 && y % spacing == 1 && x + 1 < side && y + 1 < side {
                pairs.push((id(x, y), id(x + 1, y + 1)));
                diagonals += 1;
            }
        }
    }
    (graph_from((side * side) as usize, &pairs), diagonals)
}

/// Every triangle `a < b < c` exactly once, found through only `edges()`,
/// `neighbors()`, and `has_edge()` — independent of all counting code.
fn for_each_triangle(g: &CsrGraph, mut visit: impl FnMut(VertexId, VertexId, VertexId)) {
    for (u, v) in g.edges() {
        for &w in g.neighbors(v) {
            if w > v && g.has_edge(u, w) {
                visit(u, v, w);
            }
        }
    }
}

fn corpus() -> &'static [(String, CsrGraph)] {
    static CORPUS: OnceLock<Vec<(String, CsrGraph)>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let mut graphs = Vec::new();
        const DENSITIES: [f64; 8] = [0.02, 0.05, 0.1, 0.2, 0.3, 0.5, 0.7, 0.9];
        for n in 1..=64u32 {
            for (di, &p) in DENSITIES.iter().enumerate() {
                let seed = u64::from(n) * 101 + di as u64;
                graphs.push((format!("er-n{n}-d{di}"), erdos_renyi(n, p, seed)));
            }
        }
        for scale in 4..=8u32 {
            for seed in 1..=5u64 {
                let el = RmatParams::new(scale, 8, seed).generate().unwrap();
                graphs.push((format!("rmat-s{scale}-seed{seed}"), CsrGraph::from_edge_list(&el)));
            }
        }
        let structured: [(&str, CsrGraph); 18] = [
            ("empty", graph_from(0, &[])),
            ("k1", graph_from(1, &[])),
            ("isolated-8", graph_from(8, &[])),
            ("k2", graph_from(2, &[(0, 1)])),
            ("k3", complete(3)),
            ("k4", complete(4)),
            ("k9", complete(9)),
            ("bipartite-4x5", bipartite(4, 5)),
            ("path-32", path(32)),
            ("cycle-31", cycle(31)),
            ("star-40", star(40)),
            ("bowtie", graph_from(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])),
            ("diamond", graph_from(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])),
            (
                "two-triangles",
                graph_from(6, &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]),
            ),
            ("wheel-12", wheel(12)),
            ("lollipop", lollipop()),
            ("grid-10x10-diag", grid_with_diagonals(10, 5).0),
            ("karate", karate()),
        ];
        graphs.extend(structured.into_iter().map(|(name, g)| (name.to_string(), g)));
        graphs
    })
}

// ---- criteria ----------------------------------------------------------

#[test]
fn criterion_01_karate_ground_truth() {
    let started = Instant::now();
    let g = karate();
    let stats = g.stats();
    let mut failures = Vec::new();
    if (stats.n, stats.m) != (34, 78) {
        failures.push(format!("expected n=34 m=78, loaded n={} m={}", stats.n, stats.m));
    }
    for algo in Algorithm::ALL {
        let got = algo.count(&g);
        if got != TriangleCount(45) {
            failures.push(format!("{algo} returned {got}"));
        }
    }
    let elapsed = started.elapsed();
    if elapsed >= Duration::from_secs(1) {
        failures.push(format!("took {elapsed:?}, budget 1s"));
    }
    report(
        1,
        "karate ground truth",
        failures.is_empty(),
        &if failures.is_empty() {
            format!("all 20 algorithms returned 45 on n=34 m=78 in {elapsed:.2?}")
        } else {
            failures.join("; ")
        },
    );
}

#[test]
fn criterion_02_oracle_equivalence_sweep() {
    let graphs = corpus();
    let mut failures = Vec::new();
    if graphs.len() < 500 {
        failures.push(format!("sweep has only {} graphs", graphs.len()));
    }
    for (name, g) in graphs {
        let want = brute_force(g);
        for algo in Algorithm::ALL {
            let got = algo.count(g);
            if got != want {
                failures.push(format!("{algo} on {name}: {got} != oracle {want}"));
                if failures.len() >= 5 {
                    break;
                }
            }
        }
        if failures.len() >= 5 {
            break;
        }
    }
    report(
        2,
        "oracle equivalence sweep",
        failures.is_empty(),
        &if failures.is_empty() {
            format!("all 20 algorithms match brute force on {} graphs", graphs.len())
        } else {
            failures.join("; ")
        },
    );
}

#[test]
fn criterion_03_cover_edge_invariant() {
    let mut triangles = 0u64;
    let mut uncovered = 0u64;
    for (_, g) in corpus() {
        let levels = bfs_forest(g);
        let part = classify_edges(g, &levels);
        for_each_triangle(g, |a, b, c| {
            triangles += 1;
            let horizontal = |x: VertexId, y: VertexId| {
                levels.level(x) == levels.level(y) && part.g0.has_edge(x, y)
            };
            if !(horizontal(a, b) || horizontal(b, c) || horizontal(a, c)) {
                uncovered += 1;
            }
        });
    }
    report(
        3,
        "cover-edge invariant",
        uncovered == 0 && triangles > 0,
        &format!("{triangles} enumerated triangles, {uncovered} without a horizontal edge"),
    );
}

#[test]
fn criterion_04_partition_exactness() {
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for (name, g) in corpus() {
        let part = classify_edges(g, &bfs_forest(g));
        if part.g0.edge_count() + part.g1.edge_count() != g.edge_count() {
            failures.push(format!(
                "{name}: |E0|={} + |E1|={} != m={}",
                part.g0.edge_count(),
                part.g1.edge_count(),
                g.edge_count()
            ));
        }
        for v in 0..g.vertex_count() as VertexId {
            if part.g0.degree(v) + part.g1.degree(v) != g.degree(v) {
                failures.push(format!("{name}: degree additivity fails at vertex {v}"));
                break;
            }
        }
        checked += 1;
        if failures.len() >= 5 {
            break;
        }
    }
    report(
        4,
        "partition exactness",
        failures.is_empty(),
        &if failures.is_empty() {
            format!("edge and degree sums exact on {checked} graphs")
        } else {
            failures.join("; ")
        },
    );
}

#[test]
fn criterion_05_permutation_invariance() {
    let graphs = corpus();
    let candidates: Vec<&(String, CsrGraph)> =
        graphs.iter().filter(|(_, g)| g.edge_count() > 0).collect();
    let stride = candidates.len() / 20;
    let picked: Vec<&(String, CsrGraph)> =
        candidates.iter().step_by(stride.max(1)).take(20).copied().collect();
    assert_eq!(picked.len(), 20, "selection must yield 20 graphs");

    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for (name, g) in &picked {
        let want = brute_force(g);
        for round in 0..50 {
            let n = g.vertex_count();
            let mut forward: Vec<VertexId> = (0..n as VertexId).collect();
            for i in (1..n).rev() {
                let j = (rng.next_u64() % (i as u64 + 1)) as usize;
                forward.swap(i, j);
            }
            let h = permute(g, &Permutation::from_forward(forward).unwrap());
            for algo in Algorithm::ALL {
                let got = algo.count(&h);
                if got != want {
                    failures.push(format!("{algo} on {name} perm {round}: {got} != {want}"));
                }
            }
            if !failures.is_empty() {
                break;
            }
        }
        if !failures.is_empty() {
            break;
        }
    }
    report(
        5,
        "permutation invariance",
        failures.is_empty(),
        &if failures.is_empty() {
            "20 algorithms x 20 graphs x 50 relabelings, every count unchanged".to_string()
        } else {
            failures.join("; ")
        },
    );
}

#[test]
fn criterion_06_hybrid_work_bound() {
    let mut checked = 0usize;
    let mut worst: f64 = 0.0;
    let mut failures = Vec::new();
    for (name, g) in corpus() {
        let budget: u64 = g.edges().map(|(u, v)| g.degree(u).min(g.degree(v)) as u64).sum();
        for reorder in [false, true] {
            let (_, stats) = fast_instrumented(g, reorder);
            if stats.probes > budget {
                failures.push(format!(
                    "{name} (reorder={reorder}): {} probes > budget {budget}",
                    stats.probes
                ));
            }
            if budget > 0 {
                worst = worst.max(stats.probes as f64 / budget as f64);
            }
        }
        checked += 1;
        if failures.len() >= 5 {
            break;
        }
    }
    report(
        6,
        "hybrid probe budget",
        failures.is_empty(),
        &if failures.is_empty() {
            format!(
                "probes <= sum of min-degrees on {checked} graphs x 2 modes (worst ratio {worst:.3})"
            )
        } else {
            failures.join("; ")
        },
    );
}

#[test]
fn criterion_07_relative_performance() {
    let started = Instant::now();
    let g = CsrGraph::from_edge_list(&RmatParams::new(14, 16, 42).generate().unwrap());
    let graphs = [("rmat-s14-e16-seed42".to_string(), g)];

    let slow = run_bench_entries(
        &graphs,
        &[BenchEntry::for_algorithm(Algorithm::V)],
        2,
        RootPolicy::AscendingId,
    )
    .unwrap();
    let quick = run_bench_entries(
        &graphs,
        &[
            BenchEntry::for_algorithm(Algorithm::Fh),
            BenchEntry::for_algorithm(Algorithm::Bader),
        ],
        5,
        RootPolicy::AscendingId,
    )
    .unwrap();
    let v = slow[0].mean_seconds;
    let fh = quick[0].mean_seconds;
    let bader = quick[1].mean_seconds;
    let elapsed = started.elapsed();

    let v_ratio = v / fh;
    let bader_ratio = bader / fh;
    let pass = v_ratio >= 20.0 && bader_ratio <= 3.0 && elapsed < Duration::from_secs(120);
    report(
        7,
        "relative performance",
        pass,
        &format!(
            "on n={} m={}: V/FH = {v_ratio:.1} (need >= 20), Bader/FH = {bader_ratio:.2} \
             (need <= 3) in {elapsed:.1?}",
            graphs[0].1.vertex_count(),
            graphs[0].1.edge_count()
        ),
    );
}

#[test]
fn criterion_08_high_diameter_horizontal_fraction() {
    let (g, diagonals) = grid_with_diagonals(400, 5);
    let part = classify_edges(&g, &bfs_forest(&g));
    let k = part.horizontal_fraction();
    let expected = TriangleCount(2 * diagonals as u64);
    let bader = Algorithm::Bader.count(&g);
    let fh = Algorithm::Fh.count(&g);
    let pass = k < 20.0 && bader == expected && fh == expected;
    report(
        8,
        "high-diameter structure",
        pass,
        &format!(
            "grid 400x400 + {diagonals} diagonals: n={} m={} k={k:.1}% (need < 20%), \
             triangles {bader} (expected {expected})",
            g.vertex_count(),
            g.edge_count()
        ),
    );
}

#[test]
fn criterion_09_determinism() {
    let mut failures = Vec::new();

    // Generator determinism through the real binary, both encodings.
    let dir = tempfile::tempdir().unwrap();
    for ext in ["txt", "bin"] {
        let a = dir.path().join(format!("a.{ext}"));
        let b = dir.path().join(format!("b.{ext}"));
        for path in [&a, &b] {
            let out = Command::new(env!("CARGO_BIN_EXE_tricount"))
                .args([
                    "gen-rmat",
                    path.to_str().unwrap(),
                    "--scale",
                    "10",
                    "--edge-factor",
                    "16",
                    "--seed",
                    "99",
                ])
                .output()
                .expect("binary spawns");
            if !out.status.success() {
                failures.push(format!("gen-rmat .{ext} failed"));
            }
        }
        if std::fs::read(&a).unwrap() != std::fs::read(&b).unwrap() {
            failures.push(format!("two gen-rmat runs produced different .{ext} bytes"));
        }
    }

    // Benchmark determinism: counts and k fields identical across runs.
    let config = BenchConfig {
        graphs: vec![
            GraphSource::Path(KARATE.into()),
            GraphSource::parse("rmat:scale=8,edge_factor=8,seed=3").unwrap(),
        ],
        algorithms: vec![Algorithm::Fh, Algorithm::Bader, Algorithm::Ce],
        runs: 2,
        format: OutputFormat::Csv,
        root_policy: RootPolicy::AscendingId,
    };
    let first = run_bench(&config).unwrap();
    let second = run_bench(&config).unwrap();
    let key = |records: &[tricount::bench::BenchRecord]| -> Vec<(String, usize, usize, u64, f64, String)> {
        records
            .iter()
            .map(|r| (r.graph.clone(), r.n, r.m, r.triangles, r.k_pct, r.algorithm.clone()))
            .collect()
    };
    if key(&first) != key(&second) {
        failures.push("bench runs disagreed on counts or k".to_string());
    }

    report(
        9,
        "determinism",
        failures.is_empty(),
        &if failures.is_empty() {
            "gen-rmat byte-identical (text and binary); bench counts and k identical".to_string()
        } else {
            failures.join("; ")
        },
    );
}

#[test]
fn criterion_10_harness_protocol() {
    let graphs = [("karate".to_string(), karate())];
    let mut failures = Vec::new();

    let records = run_bench_entries(
        &graphs,
        &[BenchEntry::for_algorithm(Algorithm::Fh)],
        10,
        RootPolicy::AscendingId,
    )
    .unwrap();
    let r = &records[0];
    if r.runs != 10 || r.per_run_seconds.len() != 10 {
        failures.push(format!("expected 10 runs, saw {} with {} samples", r.runs, r.per_run_seconds.len()));
    }
    let mean = r.per_run_seconds.iter().sum::<f64>() / 10.0;
    if (r.mean_seconds - mean).abs() > 1e-12 {
        failures.push(format!(
            "reported mean {} differs from arithmetic mean {mean}",
            r.mean_seconds
        ));
    }

    let broken = BenchEntry { key: "broken".into(), run: |_| TriangleCount(999) };
    match run_bench_entries(
        &graphs,
        &[BenchEntry::for_algorithm(Algorithm::F), broken],
        2,
        RootPolicy::AscendingId,
    ) {
        Err(Error::CountMismatch { graph, key_a, count_a, key_b, count_b }) => {
            if (graph.as_str(), key_a.as_str(), count_a, key_b.as_str(), count_b)
                != ("karate", "F", 45, "broken", 999)
            {
                failures.push(format!(
                    "mismatch named ({graph}, {key_a}={count_a}, {key_b}={count_b})"
                ));
            }
        }
        Err(other) => failures.push(format!("wrong error type: {other}")),
        Ok(_) => failures.push("broken variant produced a table".to_string()),
    }

    report(
        10,
        "harness protocol",
        failures.is_empty(),
        &if failures.is_empty() {
            "runs=10 arithmetic mean verified; injected broken variant aborts with both keys and counts"
                .to_string()
        } else {
            failures.join("; ")
        },
    );
}
