use serde::Serialize;

use crate::netbuild::CollabGraph;

use super::centrality::{centralization_from_values, CentralityMeasure};
use super::clustering::{average_indexed, ClusteringConvention};
use super::components::{components_indexed, connectedness_from_sizes};
use super::indexed::IndexedGraph;
use super::parallel::Parallelism;
use super::paths::sweep_all;
use super::MetricsError;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MetricsOptions {
    pub clustering: ClusteringConvention,
    pub parallelism: Parallelism,
}

impl MetricsOptions {
    pub fn with_parallelism(mut self, parallelism: Parallelism) -> Self {
        self.parallelism = parallelism;
        self
    }

    pub fn with_clustering(mut self, clustering: ClusteringConvention) -> Self {
        self.clustering = clustering;
        self
    }
}

/// Whole-network structural measures. Fractions are in [0, 1]; percentages are a
/// presentation concern.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MetricsReport {
    pub density_binary: f64,
    pub density_weighted: f64,
    pub connectedness: f64,
    pub clustering_avg: f64,
    pub clustering_convention: ClusteringConvention,
    pub component_count: usize,
    /// Sizes in descending order.
    pub component_sizes: Vec<usize>,
    pub giant_size: usize,
    pub average_distance: f64,
    pub centralization_degree: f64,
    pub centralization_closeness: f64,
    pub centralization_betweenness: f64,
}

/// Mean hop distance over unordered reachable pairs.
pub fn average_distance(g: &CollabGraph, par: Parallelism) -> Result<f64, MetricsError> {
    let ig = IndexedGraph::new(g);
    let totals = sweep_all(&ig, false, par);
    mean_distance(totals.distance_sum, totals.reachable_pairs)
}

fn mean_distance(distance_sum: u64, reachable_pairs: u64) -> Result<f64, MetricsError> {
    if reachable_pairs == 0 {
        return Err(MetricsError::undefined(
            "average_distance",
            "no pair of nodes is connected",
        ));
    }
    Ok(distance_sum as f64 / reachable_pairs as f64)
}

/// Computes every report field from one shared all-sources path sweep.
pub fn full_report(g: &CollabGraph, options: &MetricsOptions) -> Result<MetricsReport, MetricsError> {
    let n = g.node_count();
    if n < 3 {
        return Err(MetricsError::undefined(
            "report",
            format!("needs at least 3 nodes, graph has {n}"),
        ));
    }
    let ig = IndexedGraph::new(g);
    let dyads = n as f64 * (n as f64 - 1.0) / 2.0;

    let comps = components_indexed(&ig);
    let component_sizes: Vec<usize> = comps.iter().map(Vec::len).collect();
    let totals = sweep_all(&ig, true, options.parallelism);
    let degrees: Vec<f64> = (0..n).map(|i| ig.degree(i) as f64).collect();

    Ok(MetricsReport {
        density_binary: ig.edge_count() as f64 / dyads,
        density_weighted: g.total_weight() as f64 / dyads,
        connectedness: connectedness_from_sizes(&component_sizes)?,
        clustering_avg: average_indexed(&ig, options.clustering)?,
        clustering_convention: options.clustering,
        component_count: component_sizes.len(),
        giant_size: component_sizes.first().copied().unwrap_or(0),
        component_sizes,
        average_distance: mean_distance(totals.distance_sum, totals.reachable_pairs)?,
        centralization_degree: centralization_from_values(CentralityMeasure::Degree, &degrees)?,
        centralization_closeness: centralization_from_values(CentralityMeasure::Closeness, &totals.closeness)?,
        centralization_betweenness: centralization_from_values(CentralityMeasure::Betweenness, &totals.betweenness)?,
    })
}
