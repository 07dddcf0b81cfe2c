use std::collections::HashMap;

use crate::netbuild::CollabGraph;

/// Compact adjacency view of a [`CollabGraph`]. Node `i` is the `i`-th name in
/// sorted order; neighbour lists are sorted.
#[derive(Debug, Clone)]
pub struct IndexedGraph {
    names: Vec<String>,
    adjacency: Vec<Vec<u32>>,
    weighted_degree: Vec<u64>,
    index: HashMap<String, u32>,
}

impl IndexedGraph {
    pub fn new(graph: &CollabGraph) -> Self {
        let names: Vec<String> = graph.nodes().map(str::to_owned).collect();
        let index: HashMap<String, u32> = names.iter().enumerate().map(|(i, n)| (n.clone(), i as u32)).collect();
        let mut adjacency = vec![Vec::new(); names.len()];
        let mut weighted_degree = vec![0u64; names.len()];
        for (a, b, e) in graph.edges() {
            let (ia, ib) = (index[a], index[b]);
            adjacency[ia as usize].push(ib);
            adjacency[ib as usize].push(ia);
            weighted_degree[ia as usize] += e.weight;
            weighted_degree[ib as usize] += e.weight;
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        IndexedGraph {
            names,
            adjacency,
            weighted_degree,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).map(|&i| i as usize)
    }

    pub fn neighbors(&self, i: usize) -> &[u32] {
        &self.adjacency[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }

    pub fn weighted_degree(&self, i: usize) -> u64 {
        self.weighted_degree[i]
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }
}
