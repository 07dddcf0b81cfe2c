use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::netbuild::CollabGraph;

use super::indexed::IndexedGraph;
use super::MetricsError;

/// Which nodes enter the network-level clustering mean.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClusteringConvention {
    /// Only nodes with degree ≥ 2, where C_i is defined.
    #[default]
    DefinedOnly,
    /// All nodes, counting undefined C_i as 0.
    ZerosIncluded,
}

impl FromStr for ClusteringConvention {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "defined" | "defined-only" | "defined_only" => Ok(ClusteringConvention::DefinedOnly),
            "zeros" | "zeros-included" | "zeros_included" => Ok(ClusteringConvention::ZerosIncluded),
            _ => Err(format!(
                "unknown clustering convention {s:?} (expected defined or zeros)"
            )),
        }
    }
}

fn intersection_size(a: &[u32], b: &[u32]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// C_i = 2 N_i / (k_i (k_i − 1)), `None` for k_i < 2.
pub(crate) fn local_indexed(g: &IndexedGraph, v: usize) -> Option<f64> {
    let k = g.degree(v);
    if k < 2 {
        return None;
    }
    let nv = g.neighbors(v);
    let twice_links: usize = nv.iter().map(|&u| intersection_size(nv, g.neighbors(u as usize))).sum();
    Some(twice_links as f64 / (k * (k - 1)) as f64)
}

pub fn clustering_local(g: &CollabGraph, node: &str) -> Result<Option<f64>, MetricsError> {
    let ig = IndexedGraph::new(g);
    let v = ig
        .index_of(node)
        .ok_or_else(|| MetricsError::UnknownNode(node.to_owned()))?;
    Ok(local_indexed(&ig, v))
}

pub(crate) fn average_indexed(g: &IndexedGraph, convention: ClusteringConvention) -> Result<f64, MetricsError> {
    let mut sum = 0.0;
    let mut count = 0usize;
    for v in 0..g.len() {
        match (local_indexed(g, v), convention) {
            (Some(c), _) => {
                sum += c;
                count += 1;
            }
            (None, ClusteringConvention::ZerosIncluded) => count += 1,
            (None, ClusteringConvention::DefinedOnly) => {}
        }
    }
    if count == 0 {
        let reason = match convention {
            ClusteringConvention::DefinedOnly => "no node has degree >= 2",
            ClusteringConvention::ZerosIncluded => "graph has no nodes",
        };
        return Err(MetricsError::undefined("clustering_avg", reason));
    }
    Ok(sum / count as f64)
}

pub fn clustering_avg(g: &CollabGraph, convention: ClusteringConvention) -> Result<f64, MetricsError> {
    average_indexed(&IndexedGraph::new(g), convention)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::level::Level;

    fn graph(edges: &[(&str, &str)]) -> CollabGraph {
        CollabGraph::from_edges(Level::Author, edges.iter().map(|&(a, b)| (a, b, 1))).unwrap()
    }

    #[test]
    fn k4_and_k5() {
        let k4 = graph(&[("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")]);
        assert_eq!(clustering_local(&k4, "a").unwrap(), Some(1.0));
        let mut k5 = Vec::new();
        let names = ["a", "b", "c", "d", "e"];
        for i in 0..5 {
            for j in i + 1..5 {
                k5.push((names[i], names[j]));
            }
        }
        assert_eq!(
            clustering_avg(&graph(&k5), ClusteringConvention::DefinedOnly).unwrap(),
            1.0
        );
    }

    #[test]
    fn star_centre_and_leaves() {
        let g = graph(&[("c", "l1"), ("c", "l2"), ("c", "l3")]);
        assert_eq!(clustering_local(&g, "c").unwrap(), Some(0.0));
        assert_eq!(clustering_local(&g, "l1").unwrap(), None);
        assert_eq!(clustering_avg(&g, ClusteringConvention::DefinedOnly).unwrap(), 0.0);
    }

    #[test]
    fn triangle_with_pendant() {
        // d hangs off c: C_a = C_b = 1, C_c = 1/3, d undefined
        let g = graph(&[("a", "b"), ("b", "c"), ("a", "c"), ("c", "d")]);
        let defined = clustering_avg(&g, ClusteringConvention::DefinedOnly).unwrap();
        assert!((defined - (1.0 + 1.0 + 1.0 / 3.0) / 3.0).abs() < 1e-12);
        let zeros = clustering_avg(&g, ClusteringConvention::ZerosIncluded).unwrap();
        assert!((zeros - (1.0 + 1.0 + 1.0 / 3.0) / 4.0).abs() < 1e-12);
    }

    #[test]
    fn undefined_average() {
        let g = graph(&[("a", "b"), ("c", "d")]);
        assert!(matches!(
            clustering_avg(&g, ClusteringConvention::DefinedOnly),
            Err(MetricsError::Undefined {
                quantity: "clustering_avg",
                ..
            })
        ));
        assert_eq!(clustering_avg(&g, ClusteringConvention::ZerosIncluded).unwrap(), 0.0);
    }
}
