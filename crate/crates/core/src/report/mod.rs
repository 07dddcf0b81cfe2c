//! Rankings, distributions and exports built on top of the graph and metrics layers.

mod distribution;
mod export;
mod rankings;

pub use distribution::{authorship_distribution, DistributionAxis, DistributionRow, DistributionTable};
pub use export::{export_graph, to_dot, to_graphml, ExportFormat, MAX_PEN_WIDTH};
pub use rankings::{
    clique_overlaps, strongest_links, top_entities, CliqueOverlap, RankedRow, RankedTable, RankingKind,
};
