//! Brute-force reference implementations and generators shared by the
//! integration tests. Everything here favours obviousness over speed.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use collabnet::ingest::{Affiliation, AuthorEntry, PublicationRecord};
use collabnet::netbuild::CollabGraph;
use collabnet::Level;
use rand::Rng;

pub const INF: usize = usize::MAX;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data/fixture")
        .join(name)
}

pub fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

/// Arguments that load the shipped fixture corpus with all three side tables.
pub fn fixture_args() -> Vec<String> {
    vec![
        "--input".into(),
        fixture("corpus.jsonl").display().to_string(),
        "--aliases".into(),
        fixture("aliases.csv").display().to_string(),
        "--countries".into(),
        fixture("institute_countries.csv").display().to_string(),
        "--regions".into(),
        fixture("regions.csv").display().to_string(),
    ]
}

pub struct CliRun {
    pub code: i32,
    pub stdout: Vec<u8>,
    pub stderr: String,
}

pub fn run_cli<S: AsRef<str>>(args: &[S]) -> CliRun {
    let mut argv = vec!["collabnet".to_string()];
    argv.extend(args.iter().map(|s| s.as_ref().to_string()));
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = collabnet::cli::run(argv, &mut out, &mut err);
    CliRun {
        code,
        stdout: out,
        stderr: String::from_utf8_lossy(&err).into_owned(),
    }
}

/// Node `i` is named so that lexicographic order equals index order.
pub fn node_name(i: usize) -> String {
    format!("v{i:03}")
}

/// G(n, p) with weights in 1..=5.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> CollabGraph {
    let mut g = CollabGraph::new(Level::Author);
    for i in 0..n {
        g.add_node(&node_name(i));
    }
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                g.add_weight(&node_name(i), &node_name(j), rng.gen_range(1..=5), None)
                    .unwrap();
            }
        }
    }
    g
}

/// Dense boolean adjacency matrix in node-name order.
pub fn matrix(g: &CollabGraph) -> (Vec<String>, Vec<Vec<bool>>) {
    let names: Vec<String> = g.nodes().map(str::to_owned).collect();
    let pos: BTreeMap<&str, usize> = names.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
    let mut adj = vec![vec![false; names.len()]; names.len()];
    for (a, b, _) in g.edges() {
        adj[pos[a]][pos[b]] = true;
        adj[pos[b]][pos[a]] = true;
    }
    (names, adj)
}

/// All-pairs hop distances by repeated relaxation.
pub fn floyd_warshall(adj: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut d = vec![vec![INF; n]; n];
    for i in 0..n {
        d[i][i] = 0;
        for j in 0..n {
            if adj[i][j] {
                d[i][j] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] != INF && d[k][j] != INF && d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Every simple path from `s` to `t`, as vertex lists.
pub fn simple_paths(adj: &[Vec<bool>], s: usize, t: usize) -> Vec<Vec<usize>> {
    fn walk(adj: &[Vec<bool>], t: usize, path: &mut Vec<usize>, seen: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        if last == t {
            out.push(path.clone());
            return;
        }
        for next in 0..adj.len() {
            if adj[last][next] && !seen[next] {
                seen[next] = true;
                path.push(next);
                walk(adj, t, path, seen, out);
                path.pop();
                seen[next] = false;
            }
        }
    }
    let mut seen = vec![false; adj.len()];
    seen[s] = true;
    let mut out = Vec::new();
    walk(adj, t, &mut vec![s], &mut seen, &mut out);
    out
}

/// Pair-fraction betweenness from explicit enumeration of all simple paths,
/// keeping those of minimum length.
pub fn oracle_betweenness(g: &CollabGraph) -> BTreeMap<String, f64> {
    let (names, adj) = matrix(g);
    let n = names.len();
    let mut b = vec![0.0; n];
    for s in 0..n {
        for t in s + 1..n {
            let paths = simple_paths(&adj, s, t);
            let Some(shortest) = paths.iter().map(Vec::len).min() else {
                continue;
            };
            let geodesics: Vec<&Vec<usize>> = paths.iter().filter(|p| p.len() == shortest).collect();
            let total = geodesics.len() as f64;
            for v in 0..n {
                if v == s || v == t {
                    continue;
                }
                let through = geodesics.iter().filter(|p| p.contains(&v)).count() as f64;
                b[v] += through / total;
            }
        }
    }
    names.into_iter().zip(b).collect()
}

pub fn oracle_closeness(g: &CollabGraph) -> BTreeMap<String, f64> {
    let (names, adj) = matrix(g);
    let d = floyd_warshall(&adj);
    names
        .iter()
        .enumerate()
        .map(|(i, name)| {
            let c = (0..names.len())
                .filter(|&j| j != i && d[i][j] != INF)
                .map(|j| 1.0 / d[i][j] as f64)
                .sum();
            (name.clone(), c)
        })
        .collect()
}

/// Mean over unordered reachable pairs; `None` when no pair is reachable.
pub fn oracle_average_distance(g: &CollabGraph) -> Option<f64> {
    let (_, adj) = matrix(g);
    let d = floyd_warshall(&adj);
    let n = adj.len();
    let (mut sum, mut count) = (0usize, 0usize);
    for i in 0..n {
        for j in i + 1..n {
            if d[i][j] != INF {
                sum += d[i][j];
                count += 1;
            }
        }
    }
    (count > 0).then(|| sum as f64 / count as f64)
}

/// Maximal cliques of at least `min_size` members by checking every subset.
pub fn oracle_cliques(g: &CollabGraph, min_size: usize) -> BTreeSet<Vec<String>> {
    let (names, adj) = matrix(g);
    let n = names.len();
    assert!(n <= 20, "subset enumeration is exponential");
    let complete =
        |mask: u32| (0..n).all(|i| mask & (1 << i) == 0 || (i + 1..n).all(|j| mask & (1 << j) == 0 || adj[i][j]));
    let mut out = BTreeSet::new();
    for mask in 1u32..(1 << n) {
        if (mask.count_ones() as usize) < min_size || !complete(mask) {
            continue;
        }
        let extendable = (0..n).any(|v| mask & (1 << v) == 0 && complete(mask | (1 << v)));
        if !extendable {
            out.insert(
                (0..n)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| names[i].clone())
                    .collect(),
            );
        }
    }
    out
}

/// Local clustering by counting closed triples; `None` below degree 2.
pub fn oracle_local_clustering(g: &CollabGraph) -> BTreeMap<String, Option<f64>> {
    let (names, adj) = matrix(g);
    let n = names.len();
    names
        .iter()
        .enumerate()
        .map(|(i, name)| {
            let nb: Vec<usize> = (0..n).filter(|&j| adj[i][j]).collect();
            let k = nb.len();
            if k < 2 {
                return (name.clone(), None);
            }
            let mut links = 0;
            for a in 0..k {
                for b in a + 1..k {
                    if adj[nb[a]][nb[b]] {
                        links += 1;
                    }
                }
            }
            (name.clone(), Some(2.0 * links as f64 / (k * (k - 1)) as f64))
        })
        .collect()
}

/// Component sizes by flood fill, descending.
pub fn oracle_component_sizes(g: &CollabGraph) -> Vec<usize> {
    let (_, adj) = matrix(g);
    let n = adj.len();
    let mut label = vec![usize::MAX; n];
    let mut sizes = Vec::new();
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        label[s] = sizes.len();
        let mut size = 0;
        while let Some(v) = stack.pop() {
            size += 1;
            for u in 0..n {
                if adj[v][u] && label[u] == usize::MAX {
                    label[u] = sizes.len();
                    stack.push(u);
                }
            }
        }
        sizes.push(size);
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
}

/// Freeman centralization from raw per-node values and the star maximum.
pub fn freeman(values: &[f64], star_sum: f64) -> f64 {
    let max = values.iter().cloned().fold(f64::MIN, f64::max);
    values.iter().map(|v| max - v).sum::<f64>() / star_sum
}

/// Synthetic corpus over `entities` countries, one institute per country, years
/// in `years`. Every record has 1 to 4 authors.
pub fn random_corpus<R: Rng>(
    rng: &mut R,
    records: usize,
    entities: usize,
    years: (i32, i32),
) -> Vec<PublicationRecord> {
    (0..records)
        .map(|i| {
            let k = rng.gen_range(1..=4);
            let authors = (0..k)
                .map(|a| {
                    let e = rng.gen_range(0..entities);
                    AuthorEntry::new(
                        format!("author{i}_{a}"),
                        vec![Affiliation::new(
                            Some(&format!("inst{e}")),
                            Some(&format!("country{e}")),
                        )],
                    )
                })
                .collect();
            PublicationRecord {
                id: format!("p{i}"),
                title: String::new(),
                year: rng.gen_range(years.0..=years.1),
                journal: String::new(),
                authors,
                keywords: vec![],
            }
        })
        .collect()
}

/// Sparse random graph with exactly `m` edges on `n` nodes, every edge weight 1..=3.
pub fn sparse_graph<R: Rng>(rng: &mut R, n: usize, m: usize) -> CollabGraph {
    let mut g = CollabGraph::new(Level::Institute);
    for i in 0..n {
        g.add_node(&format!("n{i:05}"));
    }
    while g.edge_count() < m {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a != b {
            g.add_weight(&format!("n{a:05}"), &format!("n{b:05}"), rng.gen_range(1..=3), None)
                .unwrap();
        }
    }
    g
}

/// Golden file name and the CLI arguments (before the fixture arguments) that
/// produce it.
pub const GOLDEN_CASES: &[(&str, &[&str])] = &[
    ("stats.json", &["stats"]),
    ("build_country.json", &["build", "--level", "country"]),
    ("metrics_country.json", &["metrics", "--level", "country"]),
    ("metrics_institute.json", &["metrics", "--level", "institute"]),
    ("metrics_author.json", &["metrics", "--level", "author"]),
    (
        "metrics_country.txt",
        &["metrics", "--level", "country", "--format", "table"],
    ),
    ("top_country.csv", &["top", "--level", "country", "--format", "csv"]),
    ("top_institute.json", &["top", "--level", "institute", "--top", "5"]),
    ("links_country.json", &["links", "--level", "country", "--top", "5"]),
    ("cliques_country.json", &["cliques", "--level", "country"]),
    ("cliques_institute.json", &["cliques", "--level", "institute"]),
    (
        "series_country.csv",
        &["series", "--level", "country", "--format", "csv"],
    ),
    (
        "periods_country.json",
        &[
            "periods",
            "--level",
            "country",
            "--period",
            "early=2001-2003",
            "--period",
            "recent=2004-2007",
        ],
    ),
    (
        "growth_country.csv",
        &[
            "growth",
            "--level",
            "country",
            "--early",
            "2001-2003",
            "--recent",
            "2004-2007",
            "--format",
            "csv",
        ],
    ),
    ("dist_authors.csv", &["dist", "--axis", "authors", "--format", "csv"]),
    (
        "dist_countries.csv",
        &["dist", "--axis", "countries", "--format", "csv"],
    ),
    (
        "export_country.dot",
        &["export", "--level", "country", "--format", "dot"],
    ),
];

pub fn golden_args(prefix: &[&str]) -> Vec<String> {
    let mut args: Vec<String> = prefix.iter().map(|s| s.to_string()).collect();
    args.extend(fixture_args());
    args
}
