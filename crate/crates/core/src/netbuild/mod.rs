//! Projection of a canonical corpus onto author, institute or country
//! collaboration graphs.

mod build;
mod graph;
mod io;

pub use build::{build_graph, record_entities, AffiliationMode, BuildConfig};
pub use graph::{CollabGraph, EdgeInfo, EdgeWeightPolicy, GraphSummary, NodeAttributes, YearWindow};
pub use io::{read_edge_csv, read_node_csv, write_edge_csv, write_node_csv};

#[derive(Debug, thiserror::Error)]
pub enum GraphError {
    #[error("node {0:?} is not in the graph")]
    UnknownNode(String),
    #[error("self-loop on {0:?}")]
    SelfLoop(String),
    #[error("edge {0:?}-{1:?} has zero weight")]
    ZeroWeight(String, String),
    #[error("invalid year window {from}-{to}")]
    InvalidWindow { from: i32, to: i32 },
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
