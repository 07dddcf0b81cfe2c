//! Maximal clique enumeration: Bron–Kerbosch with Tomita pivoting, seeded from
//! a degeneracy ordering so each outer vertex is an independent task.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::netbuild::CollabGraph;

use super::indexed::IndexedGraph;
use super::parallel::Parallelism;
use super::MetricsError;

/// A maximal complete subgraph; members sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Clique {
    pub members: Vec<String>,
}

impl Clique {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, node: &str) -> bool {
        self.members.binary_search_by(|m| m.as_str().cmp(node)).is_ok()
    }
}

fn intersect(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len().min(b.len()));
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn intersection_count(a: &[u32], b: &[u32]) -> usize {
    let (mut i, mut j, mut c) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                c += 1;
                i += 1;
                j += 1;
            }
        }
    }
    c
}

struct Search<'a> {
    g: &'a IndexedGraph,
    min_size: usize,
    found: Vec<Vec<u32>>,
}

impl Search<'_> {
    fn expand(&mut self, r: &mut Vec<u32>, mut p: Vec<u32>, mut x: Vec<u32>) {
        if p.is_empty() {
            if x.is_empty() && r.len() >= self.min_size {
                let mut c = r.clone();
                c.sort_unstable();
                self.found.push(c);
            }
            return;
        }
        if r.len() + p.len() < self.min_size {
            return;
        }
        let pivot = p
            .iter()
            .chain(x.iter())
            .copied()
            .max_by_key(|&u| {
                (
                    intersection_count(&p, self.g.neighbors(u as usize)),
                    std::cmp::Reverse(u),
                )
            })
            .expect("p non-empty");
        let pivot_nbrs = self.g.neighbors(pivot as usize);
        let candidates: Vec<u32> = p
            .iter()
            .copied()
            .filter(|v| pivot_nbrs.binary_search(v).is_err())
            .collect();
        for v in candidates {
            let nv = self.g.neighbors(v as usize);
            r.push(v);
            self.expand(r, intersect(&p, nv), intersect(&x, nv));
            r.pop();
            let pos = p.binary_search(&v).expect("candidate from p");
            p.remove(pos);
            let pos = x.binary_search(&v).unwrap_err();
            x.insert(pos, v);
        }
    }
}

/// Smallest-last vertex ordering; returns position of each vertex.
fn degeneracy_positions(g: &IndexedGraph) -> Vec<usize> {
    let n = g.len();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut queue: BTreeSet<(usize, usize)> = (0..n).map(|v| (degree[v], v)).collect();
    let mut removed = vec![false; n];
    let mut position = vec![0usize; n];
    let mut next = 0;
    while let Some((_, v)) = queue.pop_first() {
        removed[v] = true;
        position[v] = next;
        next += 1;
        for &w in g.neighbors(v) {
            let w = w as usize;
            if !removed[w] {
                queue.remove(&(degree[w], w));
                degree[w] -= 1;
                queue.insert((degree[w], w));
            }
        }
    }
    position
}

pub(crate) fn cliques_indexed(g: &IndexedGraph, min_size: usize, par: Parallelism) -> Vec<Vec<u32>> {
    let position = degeneracy_positions(g);
    let per_vertex = par.map_ordered(g.len(), |v| {
        let mut p = Vec::new();
        let mut x = Vec::new();
        for &w in g.neighbors(v) {
            if position[w as usize] > position[v] {
                p.push(w);
            } else {
                x.push(w);
            }
        }
        let mut search = Search {
            g,
            min_size,
            found: Vec::new(),
        };
        search.expand(&mut vec![v as u32], p, x);
        search.found
    });
    per_vertex.into_iter().flatten().collect()
}

/// Every maximal clique with at least `min_size` (≥ 3) members, ordered by size
/// descending then lexicographically by member list.
pub fn maximal_cliques(g: &CollabGraph, min_size: usize, par: Parallelism) -> Result<Vec<Clique>, MetricsError> {
    if min_size < 3 {
        return Err(MetricsError::InvalidArgument(format!(
            "clique minimum size must be at least 3, got {min_size}"
        )));
    }
    let ig = IndexedGraph::new(g);
    let mut cliques: Vec<Clique> = cliques_indexed(&ig, min_size, par)
        .into_iter()
        .map(|c| Clique {
            // index order is name order, so members come out sorted
            members: c.into_iter().map(|i| ig.name(i as usize).to_owned()).collect(),
        })
        .collect();
    cliques.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.members.cmp(&b.members)));
    Ok(cliques)
}
