//! Density, per-node centralities and Freeman centralization.
//!
//! Closeness is the reciprocal-sum variant (unreachable nodes add 0), which stays
//! meaningful on disconnected graphs. Centralization divides the summed gaps to the
//! most central node by the same sum evaluated on a star with the same number of
//! nodes, under the same per-node normalisation.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::netbuild::CollabGraph;

use super::indexed::IndexedGraph;
use super::parallel::Parallelism;
use super::paths::{bfs_distances, sweep_all, UNREACHED};
use super::MetricsError;

fn dyads(n: usize) -> f64 {
    n as f64 * (n as f64 - 1.0) / 2.0
}

fn require_nodes(g: &CollabGraph, min: usize, quantity: &'static str) -> Result<usize, MetricsError> {
    let n = g.node_count();
    if n < min {
        return Err(MetricsError::undefined(
            quantity,
            format!("needs at least {min} nodes, graph has {n}"),
        ));
    }
    Ok(n)
}

/// Existing edges over the number of unordered node pairs.
pub fn density_binary(g: &CollabGraph) -> Result<f64, MetricsError> {
    let n = require_nodes(g, 2, "density_binary")?;
    Ok(g.edge_count() as f64 / dyads(n))
}

/// Total edge weight over the number of unordered node pairs.
pub fn density_weighted(g: &CollabGraph) -> Result<f64, MetricsError> {
    let n = require_nodes(g, 2, "density_weighted")?;
    Ok(g.total_weight() as f64 / dyads(n))
}

/// Weighted density from headline totals alone.
pub fn density_weighted_from_totals(nodes: usize, total_weight: u64) -> Result<f64, MetricsError> {
    if nodes < 2 {
        return Err(MetricsError::undefined(
            "density_weighted",
            format!("needs at least 2 nodes, got {nodes}"),
        ));
    }
    Ok(total_weight as f64 / dyads(nodes))
}

fn index_of(ig: &IndexedGraph, node: &str) -> Result<usize, MetricsError> {
    ig.index_of(node)
        .ok_or_else(|| MetricsError::UnknownNode(node.to_owned()))
}

/// Hop distances from `source` to every reachable node other than itself.
pub fn shortest_path_lengths(g: &CollabGraph, source: &str) -> Result<BTreeMap<String, usize>, MetricsError> {
    let ig = IndexedGraph::new(g);
    let s = index_of(&ig, source)?;
    let dist = bfs_distances(&ig, s);
    Ok(dist
        .iter()
        .enumerate()
        .filter(|&(i, &d)| i != s && d != UNREACHED)
        .map(|(i, &d)| (ig.name(i).to_owned(), d as usize))
        .collect())
}

/// Σ 1/d(v,u) over all other nodes, unreachable ones contributing 0.
pub fn closeness(g: &CollabGraph, node: &str) -> Result<f64, MetricsError> {
    let ig = IndexedGraph::new(g);
    let v = index_of(&ig, node)?;
    let dist = bfs_distances(&ig, v);
    Ok(dist
        .iter()
        .enumerate()
        .filter(|&(i, &d)| i != v && d != UNREACHED)
        .map(|(_, &d)| 1.0 / d as f64)
        .sum())
}

/// Σ over unordered pairs {s,t} not containing `node` of σ_st(node)/σ_st.
pub fn betweenness(g: &CollabGraph, node: &str) -> Result<f64, MetricsError> {
    let ig = IndexedGraph::new(g);
    let v = index_of(&ig, node)?;
    Ok(sweep_all(&ig, true, Parallelism::single()).betweenness[v])
}

/// Raw betweenness of every node, in sorted node order.
pub fn betweenness_all(g: &CollabGraph, par: Parallelism) -> BTreeMap<String, f64> {
    let ig = IndexedGraph::new(g);
    let totals = sweep_all(&ig, true, par);
    ig.names().iter().cloned().zip(totals.betweenness).collect()
}

/// Per-node structural measures.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NodeCentrality {
    pub node: String,
    pub degree: usize,
    pub weighted_degree: u64,
    pub closeness: f64,
    pub betweenness: f64,
    /// `None` when degree < 2.
    pub clustering: Option<f64>,
}

pub fn node_centralities(g: &CollabGraph, par: Parallelism) -> Vec<NodeCentrality> {
    let ig = IndexedGraph::new(g);
    let totals = sweep_all(&ig, true, par);
    (0..ig.len())
        .map(|i| NodeCentrality {
            node: ig.name(i).to_owned(),
            degree: ig.degree(i),
            weighted_degree: ig.weighted_degree(i),
            closeness: totals.closeness[i],
            betweenness: totals.betweenness[i],
            clustering: super::clustering::local_indexed(&ig, i),
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CentralityMeasure {
    Degree,
    Closeness,
    Betweenness,
}

impl CentralityMeasure {
    pub const ALL: [CentralityMeasure; 3] = [
        CentralityMeasure::Degree,
        CentralityMeasure::Closeness,
        CentralityMeasure::Betweenness,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CentralityMeasure::Degree => "degree",
            CentralityMeasure::Closeness => "closeness",
            CentralityMeasure::Betweenness => "betweenness",
        }
    }

    /// Maps a raw per-node value onto [0, 1] for a graph of `n` nodes.
    pub fn normalize(self, raw: f64, n: usize) -> f64 {
        let n = n as f64;
        match self {
            CentralityMeasure::Degree | CentralityMeasure::Closeness => raw / (n - 1.0),
            CentralityMeasure::Betweenness => raw / ((n - 1.0) * (n - 2.0) / 2.0),
        }
    }

    /// Raw (centre, leaf) values on the star with `n` nodes.
    pub fn star_values(self, n: usize) -> (f64, f64) {
        let leaves = n as f64 - 1.0;
        match self {
            CentralityMeasure::Degree => (leaves, 1.0),
            // leaf: the centre at distance 1, the other n-2 leaves at distance 2
            CentralityMeasure::Closeness => (leaves, 1.0 + (leaves - 1.0) / 2.0),
            CentralityMeasure::Betweenness => (leaves * (leaves - 1.0) / 2.0, 0.0),
        }
    }

    /// Σ (C_max − C_i) attained by the star with `n` nodes.
    pub fn star_normalizer(self, n: usize) -> f64 {
        let (centre, leaf) = self.star_values(n);
        (n as f64 - 1.0) * (self.normalize(centre, n) - self.normalize(leaf, n))
    }
}

impl fmt::Display for CentralityMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CentralityMeasure {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "degree" => Ok(CentralityMeasure::Degree),
            "closeness" => Ok(CentralityMeasure::Closeness),
            "betweenness" => Ok(CentralityMeasure::Betweenness),
            _ => Err(format!("unknown centrality measure {s:?}")),
        }
    }
}

/// Freeman centralization from raw per-node values.
pub fn centralization_from_values(measure: CentralityMeasure, raw: &[f64]) -> Result<f64, MetricsError> {
    let n = raw.len();
    if n < 3 {
        return Err(MetricsError::undefined(
            measure.centralization_field(),
            format!("needs at least 3 nodes, graph has {n}"),
        ));
    }
    let normalized: Vec<f64> = raw.iter().map(|&r| measure.normalize(r, n)).collect();
    let max = normalized.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let gaps: f64 = normalized.iter().map(|c| max - c).sum();
    Ok(gaps / measure.star_normalizer(n))
}

impl CentralityMeasure {
    pub(crate) fn centralization_field(self) -> &'static str {
        match self {
            CentralityMeasure::Degree => "centralization_degree",
            CentralityMeasure::Closeness => "centralization_closeness",
            CentralityMeasure::Betweenness => "centralization_betweenness",
        }
    }
}

pub fn centralization(g: &CollabGraph, measure: CentralityMeasure, par: Parallelism) -> Result<f64, MetricsError> {
    require_nodes(g, 3, measure.centralization_field())?;
    let ig = IndexedGraph::new(g);
    let raw: Vec<f64> = match measure {
        CentralityMeasure::Degree => (0..ig.len()).map(|i| ig.degree(i) as f64).collect(),
        CentralityMeasure::Closeness => sweep_all(&ig, false, par).closeness,
        CentralityMeasure::Betweenness => sweep_all(&ig, true, par).betweenness,
    };
    centralization_from_values(measure, &raw)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::level::Level;

    fn star(n: usize) -> CollabGraph {
        let names: Vec<String> = (0..n).map(|i| format!("n{i}")).collect();
        CollabGraph::from_edges(Level::Author, (1..n).map(|i| (names[0].as_str(), names[i].as_str(), 1))).unwrap()
    }

    fn path(n: usize) -> CollabGraph {
        let names: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
        CollabGraph::from_edges(
            Level::Author,
            (1..n).map(|i| (names[i - 1].as_str(), names[i].as_str(), 1)),
        )
        .unwrap()
    }

    fn complete(n: usize) -> CollabGraph {
        let names: Vec<String> = (0..n).map(|i| format!("k{i}")).collect();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((names[i].as_str(), names[j].as_str(), 1));
            }
        }
        CollabGraph::from_edges(Level::Author, edges).unwrap()
    }

    #[test]
    fn densities() {
        assert_eq!(density_binary(&complete(4)).unwrap(), 1.0);
        assert!((density_binary(&path(3)).unwrap() - 2.0 / 3.0).abs() < 1e-12);
        assert_eq!(density_weighted(&complete(3)).unwrap(), 1.0);
        assert!(density_binary(&CollabGraph::new(Level::Author)).is_err());
    }

    #[test]
    fn weighted_density_from_totals() {
        assert!((density_weighted_from_totals(66, 1076).unwrap() - 0.5016).abs() < 1e-4);
        assert!((density_weighted_from_totals(907, 2583).unwrap() - 0.00629).abs() < 1e-5);
        assert!(density_weighted_from_totals(1, 0).is_err());
    }

    #[test]
    fn distances_on_path_and_star() {
        let d = shortest_path_lengths(&path(3), "p0").unwrap();
        assert_eq!(d, BTreeMap::from([("p1".to_owned(), 1), ("p2".to_owned(), 2)]));
        let s = shortest_path_lengths(&star(5), "n0").unwrap();
        assert!(s.values().all(|&d| d == 1));
        assert_eq!(s.len(), 4);
        assert!(matches!(
            shortest_path_lengths(&star(3), "x"),
            Err(MetricsError::UnknownNode(_))
        ));
    }

    #[test]
    fn star_closeness_and_betweenness() {
        let g = star(5);
        assert_eq!(closeness(&g, "n0").unwrap(), 4.0);
        assert_eq!(closeness(&g, "n1").unwrap(), 2.5);
        assert_eq!(betweenness(&g, "n0").unwrap(), 6.0);
        assert_eq!(betweenness(&g, "n3").unwrap(), 0.0);
    }

    #[test]
    fn isolate_closeness_zero() {
        let mut g = star(4);
        g.add_node("lonely");
        assert_eq!(closeness(&g, "lonely").unwrap(), 0.0);
    }

    #[test]
    fn complete_graph_betweenness_zero() {
        let g = complete(6);
        for v in g.nodes() {
            assert_eq!(betweenness(&g, v).unwrap(), 0.0);
        }
    }

    #[test]
    fn star_normalizer_matches_built_star() {
        for n in 3..12 {
            let g = star(n);
            for m in CentralityMeasure::ALL {
                let c = centralization(&g, m, Parallelism::single()).unwrap();
                assert!((c - 1.0).abs() < 1e-9, "n={n} {m}: {c}");
            }
        }
    }

    #[test]
    fn closed_form_normalizers() {
        for n in 3..50 {
            let nf = n as f64;
            assert!((CentralityMeasure::Degree.star_normalizer(n) - (nf - 2.0)).abs() < 1e-9);
            assert!((CentralityMeasure::Closeness.star_normalizer(n) - (nf - 2.0) / 2.0).abs() < 1e-9);
            assert!((CentralityMeasure::Betweenness.star_normalizer(n) - (nf - 1.0)).abs() < 1e-9);
        }
    }

    #[test]
    fn centralization_needs_three_nodes() {
        let g = path(2);
        assert!(matches!(
            centralization(&g, CentralityMeasure::Degree, Parallelism::single()),
            Err(MetricsError::Undefined {
                quantity: "centralization_degree",
                ..
            })
        ));
    }
}
