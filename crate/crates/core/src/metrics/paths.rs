//! Breadth-first shortest paths from every source, with Brandes dependency
//! accumulation for betweenness.

use std::collections::VecDeque;

use super::indexed::IndexedGraph;
use super::parallel::{chunk_bounds, Parallelism};

pub(crate) const UNREACHED: u32 = u32::MAX;

/// Hop distances from `source`; unreachable nodes hold [`UNREACHED`].
pub(crate) fn bfs_distances(g: &IndexedGraph, source: usize) -> Vec<u32> {
    let mut dist = vec![UNREACHED; g.len()];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source as u32);
    while let Some(v) = queue.pop_front() {
        let dv = dist[v as usize];
        for &w in g.neighbors(v as usize) {
            if dist[w as usize] == UNREACHED {
                dist[w as usize] = dv + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Aggregates of a full all-sources sweep.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct PathTotals {
    /// Σ 1/d(v,u) over reachable u ≠ v.
    pub closeness: Vec<f64>,
    /// Σ over unordered pairs of σ_st(v)/σ_st; empty when not requested.
    pub betweenness: Vec<f64>,
    /// Σ d(s,t) over ordered reachable pairs.
    pub distance_sum: u64,
    /// Number of ordered reachable pairs (s ≠ t).
    pub reachable_pairs: u64,
}

struct Workspace {
    dist: Vec<u32>,
    sigma: Vec<f64>,
    delta: Vec<f64>,
    order: Vec<u32>,
    queue: VecDeque<u32>,
}

impl Workspace {
    fn new(n: usize) -> Self {
        Workspace {
            dist: vec![UNREACHED; n],
            sigma: vec![0.0; n],
            delta: vec![0.0; n],
            order: Vec::with_capacity(n),
            queue: VecDeque::with_capacity(n),
        }
    }
}

struct ChunkResult {
    closeness: Vec<f64>,
    betweenness: Vec<f64>,
    distance_sum: u64,
    reachable_pairs: u64,
}

fn sweep_chunk(g: &IndexedGraph, start: usize, end: usize, with_betweenness: bool) -> ChunkResult {
    let n = g.len();
    let mut ws = Workspace::new(n);
    let mut out = ChunkResult {
        closeness: Vec::with_capacity(end - start),
        betweenness: if with_betweenness { vec![0.0; n] } else { Vec::new() },
        distance_sum: 0,
        reachable_pairs: 0,
    };

    for s in start..end {
        // reset only what the previous source touched
        for &v in &ws.order {
            let v = v as usize;
            ws.dist[v] = UNREACHED;
            ws.sigma[v] = 0.0;
            ws.delta[v] = 0.0;
        }
        ws.order.clear();

        ws.dist[s] = 0;
        ws.sigma[s] = 1.0;
        ws.queue.push_back(s as u32);
        while let Some(v) = ws.queue.pop_front() {
            let v = v as usize;
            ws.order.push(v as u32);
            let dv = ws.dist[v];
            for &w in g.neighbors(v) {
                let w = w as usize;
                if ws.dist[w] == UNREACHED {
                    ws.dist[w] = dv + 1;
                    ws.queue.push_back(w as u32);
                }
                if ws.dist[w] == dv + 1 {
                    ws.sigma[w] += ws.sigma[v];
                }
            }
        }

        let mut recip = 0.0;
        for &v in &ws.order[1..] {
            let d = ws.dist[v as usize];
            recip += 1.0 / d as f64;
            out.distance_sum += d as u64;
        }
        out.reachable_pairs += (ws.order.len() - 1) as u64;
        out.closeness.push(recip);

        if with_betweenness {
            for &w in ws.order.iter().rev() {
                let w = w as usize;
                let dw = ws.dist[w];
                if dw == 0 {
                    continue;
                }
                let coeff = (1.0 + ws.delta[w]) / ws.sigma[w];
                for &v in g.neighbors(w) {
                    let v = v as usize;
                    if ws.dist[v] + 1 == dw {
                        ws.delta[v] += ws.sigma[v] * coeff;
                    }
                }
                out.betweenness[w] += ws.delta[w];
            }
        }
    }
    out
}

/// Runs BFS from every node. Results are identical for any worker count.
pub(crate) fn sweep_all(g: &IndexedGraph, with_betweenness: bool, par: Parallelism) -> PathTotals {
    let n = g.len();
    let chunks = chunk_bounds(n);
    let results = par.map_ordered(chunks.len(), |c| {
        let (s, e) = chunks[c];
        sweep_chunk(g, s, e, with_betweenness)
    });

    let mut totals = PathTotals {
        closeness: Vec::with_capacity(n),
        betweenness: if with_betweenness { vec![0.0; n] } else { Vec::new() },
        distance_sum: 0,
        reachable_pairs: 0,
    };
    for chunk in results {
        totals.closeness.extend(chunk.closeness);
        totals.distance_sum += chunk.distance_sum;
        totals.reachable_pairs += chunk.reachable_pairs;
        for (acc, b) in totals.betweenness.iter_mut().zip(chunk.betweenness) {
            *acc += b;
        }
    }
    // every unordered pair was counted from both ends
    for b in &mut totals.betweenness {
        *b /= 2.0;
    }
    totals
}
