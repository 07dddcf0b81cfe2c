use serde::Serialize;

use crate::metrics::Clique;
use crate::netbuild::CollabGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RankingKind {
    TopEntities,
    StrongestLinks,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankedRow {
    pub rank: usize,
    pub entity: String,
    /// Second endpoint for link rankings.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partner: Option<String>,
    pub total_collaborations: u64,
    /// Distinct collaborators (binary degree); absent for link rankings.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub collaborator_count: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankedTable {
    pub kind: RankingKind,
    pub rows: Vec<RankedRow>,
    /// Share of the total weight held by the listed links (link rankings only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub concentration: Option<f64>,
}

/// Entities by weighted degree, then degree, then name. `k` larger than the node
/// count returns every node.
pub fn top_entities(g: &CollabGraph, k: usize) -> RankedTable {
    let mut all: Vec<(&str, usize, u64)> = g.degrees().into_iter().map(|(n, (d, w))| (n, d, w)).collect();
    all.sort_by(|a, b| b.2.cmp(&a.2).then_with(|| b.1.cmp(&a.1)).then_with(|| a.0.cmp(b.0)));
    let rows = all
        .into_iter()
        .take(k)
        .enumerate()
        .map(|(i, (name, degree, weight))| RankedRow {
            rank: i + 1,
            entity: name.to_owned(),
            partner: None,
            total_collaborations: weight,
            collaborator_count: Some(degree),
        })
        .collect();
    RankedTable {
        kind: RankingKind::TopEntities,
        rows,
        concentration: None,
    }
}

/// Edges by weight, then endpoint names.
pub fn strongest_links(g: &CollabGraph, k: usize) -> RankedTable {
    let mut all: Vec<(&str, &str, u64)> = g.edges().map(|(a, b, e)| (a, b, e.weight)).collect();
    all.sort_by(|x, y| y.2.cmp(&x.2).then_with(|| (x.0, x.1).cmp(&(y.0, y.1))));
    let total = g.total_weight();
    let listed: u64 = all.iter().take(k).map(|e| e.2).sum();
    let rows = all
        .into_iter()
        .take(k)
        .enumerate()
        .map(|(i, (a, b, w))| RankedRow {
            rank: i + 1,
            entity: a.to_owned(),
            partner: Some(b.to_owned()),
            total_collaborations: w,
            collaborator_count: None,
        })
        .collect();
    RankedTable {
        kind: RankingKind::StrongestLinks,
        rows,
        concentration: Some(if total == 0 { 0.0 } else { listed as f64 / total as f64 }),
    }
}

/// A node that belongs to more than one listed clique.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueOverlap {
    pub node: String,
    /// Zero-based positions in the clique list.
    pub cliques: Vec<usize>,
}

pub fn clique_overlaps(cliques: &[Clique]) -> Vec<CliqueOverlap> {
    let mut by_node: std::collections::BTreeMap<&str, Vec<usize>> = Default::default();
    for (i, c) in cliques.iter().enumerate() {
        for m in &c.members {
            by_node.entry(m).or_default().push(i);
        }
    }
    by_node
        .into_iter()
        .filter(|(_, v)| v.len() > 1)
        .map(|(n, cliques)| CliqueOverlap {
            node: n.to_owned(),
            cliques,
        })
        .collect()
}
