//! Multi-level co-authorship network analysis.
//!
//! Publication records are cleaned and resolved by [`ingest`], projected into
//! weighted author, institute or country graphs by [`netbuild`], measured by
//! [`metrics`], sliced over time by [`temporal`] and turned into ranked tables
//! and drawable exports by [`report`]. The `collabnet` binary is a thin wrapper
//! over [`cli::run`].

pub mod cli;
pub mod ingest;
mod level;
pub mod metrics;
pub mod netbuild;
pub mod report;
pub mod temporal;

pub use level::{Level, Region, UnknownLevel};
