//! Structural measures of a collaboration graph: density, centralities and their
//! Freeman centralizations, clustering, components, distances and cliques.
//!
//! Distances are hop counts; edge weights only enter the weighted density and the
//! weighted degree.

mod centrality;
mod cliques;
mod clustering;
mod components;
mod indexed;
mod parallel;
mod paths;
mod report;

pub use centrality::{
    betweenness, betweenness_all, centralization, centralization_from_values, closeness, density_binary,
    density_weighted, density_weighted_from_totals, node_centralities, shortest_path_lengths, CentralityMeasure,
    NodeCentrality,
};
pub use cliques::{maximal_cliques, Clique};
pub use clustering::{clustering_avg, clustering_local, ClusteringConvention};
pub use components::{components, connectedness, connectedness_from_sizes};
pub use parallel::{Parallelism, THREADS_ENV};
pub use report::{average_distance, full_report, MetricsOptions, MetricsReport};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MetricsError {
    /// The quantity has no value on this graph (as opposed to measuring 0).
    #[error("{quantity} is undefined: {reason}")]
    Undefined { quantity: &'static str, reason: String },
    #[error("node {0:?} is not in the graph")]
    UnknownNode(String),
    #[error("{0}")]
    InvalidArgument(String),
}

impl MetricsError {
    pub(crate) fn undefined(quantity: &'static str, reason: impl Into<String>) -> Self {
        MetricsError::Undefined {
            quantity,
            reason: reason.into(),
        }
    }
}
