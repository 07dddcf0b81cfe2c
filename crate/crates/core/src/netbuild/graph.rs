use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::ingest::EntityRegistry;
use crate::level::Level;

use super::GraphError;

/// Inclusive range of calendar years.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct YearWindow {
    pub from: i32,
    pub to: i32,
}

impl YearWindow {
    pub fn new(from: i32, to: i32) -> Result<Self, GraphError> {
        if from > to {
            return Err(GraphError::InvalidWindow { from, to });
        }
        Ok(YearWindow { from, to })
    }

    pub fn single(year: i32) -> Self {
        YearWindow { from: year, to: year }
    }

    pub fn contains(&self, year: i32) -> bool {
        self.from <= year && year <= self.to
    }

    /// Number of calendar years covered, counting both ends.
    pub fn span(&self) -> u32 {
        (self.to - self.from + 1) as u32
    }

    pub fn overlaps(&self, other: &YearWindow) -> bool {
        self.from <= other.to && other.from <= self.to
    }
}

impl fmt::Display for YearWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.from, self.to)
    }
}

impl FromStr for YearWindow {
    type Err = String;

    /// Parses `1983-1997` or a single year `1983`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let parse = |t: &str| t.trim().parse::<i32>().map_err(|_| format!("bad year in window {s:?}"));
        let (from, to) = match s.split_once('-') {
            Some((a, b)) => (parse(a)?, parse(b)?),
            None => {
                let y = parse(s)?;
                (y, y)
            }
        };
        YearWindow::new(from, to).map_err(|e| e.to_string())
    }
}

/// How a publication's co-occurring entities add weight to their edges.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeWeightPolicy {
    /// Each publication adds at most 1 to any pair.
    #[default]
    PerPublication,
    /// Each publication adds `count(a) * count(b)`, counting the author instances
    /// that carry each entity.
    PerPairOccurrence,
}

impl EdgeWeightPolicy {
    pub fn as_str(self) -> &'static str {
        match self {
            EdgeWeightPolicy::PerPublication => "per-publication",
            EdgeWeightPolicy::PerPairOccurrence => "per-pair",
        }
    }
}

impl FromStr for EdgeWeightPolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "per-publication" | "per_publication" => Ok(EdgeWeightPolicy::PerPublication),
            "per-pair" | "per_pair" | "per_pair_occurrence" => Ok(EdgeWeightPolicy::PerPairOccurrence),
            other => Err(format!(
                "unknown policy {other:?} (expected per-publication or per-pair)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeInfo {
    pub weight: u64,
    pub first_year: Option<i32>,
    pub last_year: Option<i32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub nodes: usize,
    pub edges: usize,
    pub total_weight: u64,
}

pub type NodeAttributes = BTreeMap<String, String>;

/// Undirected, weighted, simple collaboration graph over canonical entity names.
///
/// Edges are stored once with the lexicographically smaller endpoint first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollabGraph {
    level: Level,
    window: Option<YearWindow>,
    policy: EdgeWeightPolicy,
    nodes: BTreeMap<String, NodeAttributes>,
    edges: BTreeMap<(String, String), EdgeInfo>,
}

fn edge_key(a: &str, b: &str) -> (String, String) {
    if a <= b {
        (a.to_owned(), b.to_owned())
    } else {
        (b.to_owned(), a.to_owned())
    }
}

impl CollabGraph {
    pub fn new(level: Level) -> Self {
        CollabGraph {
            level,
            window: None,
            policy: EdgeWeightPolicy::default(),
            nodes: BTreeMap::new(),
            edges: BTreeMap::new(),
        }
    }

    /// Builds a graph from `(a, b, weight)` triples; endpoints become nodes.
    pub fn from_edges<'a, I>(level: Level, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (&'a str, &'a str, u64)>,
    {
        let mut g = CollabGraph::new(level);
        for (a, b, w) in edges {
            g.add_weight(a, b, w, None)?;
        }
        Ok(g)
    }

    pub fn with_metadata(mut self, window: Option<YearWindow>, policy: EdgeWeightPolicy) -> Self {
        self.window = window;
        self.policy = policy;
        self
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn window(&self) -> Option<YearWindow> {
        self.window
    }

    pub fn policy(&self) -> EdgeWeightPolicy {
        self.policy
    }

    pub fn add_node(&mut self, name: &str) {
        if !self.nodes.contains_key(name) {
            self.nodes.insert(name.to_owned(), NodeAttributes::new());
        }
    }

    pub fn set_attribute(&mut self, node: &str, key: &str, value: &str) -> Result<(), GraphError> {
        let attrs = self
            .nodes
            .get_mut(node)
            .ok_or_else(|| GraphError::UnknownNode(node.to_owned()))?;
        attrs.insert(key.to_owned(), value.to_owned());
        Ok(())
    }

    /// Adds `weight` to edge `a–b`, creating nodes and the edge as needed.
    pub fn add_weight(&mut self, a: &str, b: &str, weight: u64, year: Option<i32>) -> Result<(), GraphError> {
        if a == b {
            return Err(GraphError::SelfLoop(a.to_owned()));
        }
        if weight == 0 {
            return Err(GraphError::ZeroWeight(a.to_owned(), b.to_owned()));
        }
        self.add_node(a);
        self.add_node(b);
        let edge = self.edges.entry(edge_key(a, b)).or_insert(EdgeInfo {
            weight: 0,
            first_year: year,
            last_year: year,
        });
        edge.weight += weight;
        if let Some(y) = year {
            edge.first_year = Some(edge.first_year.map_or(y, |f| f.min(y)));
            edge.last_year = Some(edge.last_year.map_or(y, |l| l.max(y)));
        }
        Ok(())
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn total_weight(&self) -> u64 {
        self.edges.values().map(|e| e.weight).sum()
    }

    pub fn summary(&self) -> GraphSummary {
        GraphSummary {
            nodes: self.node_count(),
            edges: self.edge_count(),
            total_weight: self.total_weight(),
        }
    }

    pub fn contains(&self, node: &str) -> bool {
        self.nodes.contains_key(node)
    }

    /// Node names in sorted order.
    pub fn nodes(&self) -> impl ExactSizeIterator<Item = &str> {
        self.nodes.keys().map(String::as_str)
    }

    pub fn attributes(&self, node: &str) -> Option<&NodeAttributes> {
        self.nodes.get(node)
    }

    /// Edges as `(a, b, info)` with `a < b`, sorted.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = (&str, &str, &EdgeInfo)> {
        self.edges.iter().map(|((a, b), e)| (a.as_str(), b.as_str(), e))
    }

    pub fn weight(&self, a: &str, b: &str) -> Option<u64> {
        self.edges.get(&edge_key(a, b)).map(|e| e.weight)
    }

    /// Per node: (distinct neighbours, sum of incident weights).
    pub fn degrees(&self) -> BTreeMap<&str, (usize, u64)> {
        let mut out: BTreeMap<&str, (usize, u64)> = self.nodes().map(|n| (n, (0, 0))).collect();
        for (a, b, e) in self.edges() {
            for end in [a, b] {
                let slot = out.get_mut(end).expect("edge endpoint is a node");
                slot.0 += 1;
                slot.1 += e.weight;
            }
        }
        out
    }

    /// Nodes with at least one incident edge.
    pub fn active_node_count(&self) -> usize {
        self.edges().flat_map(|(a, b, _)| [a, b]).collect::<BTreeSet<_>>().len()
    }

    pub fn remove_isolates(&mut self) {
        let active: BTreeSet<String> = self.edges.keys().flat_map(|(a, b)| [a.clone(), b.clone()]).collect();
        self.nodes.retain(|n, _| active.contains(n));
    }

    /// Restriction to `subset`, keeping weights and attributes.
    pub fn induced_subgraph<S: AsRef<str>>(&self, subset: &[S]) -> Result<CollabGraph, GraphError> {
        let mut keep: BTreeSet<&str> = BTreeSet::new();
        for name in subset {
            let name = name.as_ref();
            if !self.contains(name) {
                return Err(GraphError::UnknownNode(name.to_owned()));
            }
            keep.insert(name);
        }
        let nodes = self
            .nodes
            .iter()
            .filter(|(n, _)| keep.contains(n.as_str()))
            .map(|(n, a)| (n.clone(), a.clone()))
            .collect();
        let edges = self
            .edges
            .iter()
            .filter(|((a, b), _)| keep.contains(a.as_str()) && keep.contains(b.as_str()))
            .map(|(k, e)| (k.clone(), e.clone()))
            .collect();
        Ok(CollabGraph {
            level: self.level,
            window: self.window,
            policy: self.policy,
            nodes,
            edges,
        })
    }

    /// Tags country nodes (and institute nodes with a known country) with their region.
    pub fn annotate_regions(&mut self, registry: &EntityRegistry) {
        let level = self.level;
        for (name, attrs) in self.nodes.iter_mut() {
            let country = match level {
                Level::Country => Some(name.as_str()),
                Level::Institute => attrs.get("country").map(String::as_str),
                Level::Author => None,
            };
            if let Some(region) = country.and_then(|c| registry.region_of(c)) {
                attrs.insert("region".to_owned(), region.to_string());
            }
        }
    }
}
