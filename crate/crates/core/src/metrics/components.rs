use std::collections::VecDeque;

use crate::netbuild::CollabGraph;

use super::indexed::IndexedGraph;
use super::MetricsError;

/// Connected components as index lists, largest first, ties by smallest member.
pub(crate) fn components_indexed(g: &IndexedGraph) -> Vec<Vec<usize>> {
    let n = g.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        queue.push_back(start);
        let mut comp = Vec::new();
        while let Some(v) = queue.pop_front() {
            comp.push(v);
            for &w in g.neighbors(v) {
                let w = w as usize;
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    // names are sorted, so the smallest index is the lexicographically smallest member
    out.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a[0].cmp(&b[0])));
    out
}

/// Maximal connected node sets, members sorted, ordered by size descending then
/// by smallest member.
pub fn components(g: &CollabGraph) -> Vec<Vec<String>> {
    let ig = IndexedGraph::new(g);
    components_indexed(&ig)
        .into_iter()
        .map(|c| c.into_iter().map(|i| ig.name(i).to_owned()).collect())
        .collect()
}

/// Reachable ordered pairs over n(n−1), from component sizes.
pub fn connectedness_from_sizes(sizes: &[usize]) -> Result<f64, MetricsError> {
    let n: usize = sizes.iter().sum();
    if n < 2 {
        return Err(MetricsError::undefined(
            "connectedness",
            format!("needs at least 2 nodes, graph has {n}"),
        ));
    }
    let reachable: u128 = sizes.iter().map(|&s| s as u128 * (s as u128).saturating_sub(1)).sum();
    Ok(reachable as f64 / (n as u128 * (n as u128 - 1)) as f64)
}

pub fn connectedness(g: &CollabGraph) -> Result<f64, MetricsError> {
    let sizes: Vec<usize> = components(g).iter().map(Vec::len).collect();
    if sizes.iter().sum::<usize>() < 2 {
        return Err(MetricsError::undefined(
            "connectedness",
            format!("needs at least 2 nodes, graph has {}", g.node_count()),
        ));
    }
    connectedness_from_sizes(&sizes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::level::Level;

    #[test]
    fn empty_and_connected() {
        assert!(components(&CollabGraph::new(Level::Author)).is_empty());
        let g = CollabGraph::from_edges(Level::Author, [("a", "b", 1), ("b", "c", 1)]).unwrap();
        assert_eq!(components(&g).len(), 1);
        assert_eq!(connectedness(&g).unwrap(), 1.0);
    }

    #[test]
    fn ordering_and_partition_three_two() {
        let mut g = CollabGraph::from_edges(
            Level::Author,
            [("x", "y", 1), ("b", "c", 1), ("c", "d", 1), ("m", "n", 1)],
        )
        .unwrap();
        g.add_node("a");
        let comps = components(&g);
        assert_eq!(
            comps,
            vec![
                vec!["b".to_owned(), "c".into(), "d".into()],
                vec!["m".to_owned(), "n".into()],
                vec!["x".to_owned(), "y".into()],
                vec!["a".to_owned()],
            ]
        );
    }

    #[test]
    fn connectedness_formula_instances() {
        assert!((connectedness_from_sizes(&[3, 2]).unwrap() - 0.40).abs() < 1e-12);
        let k = 5usize;
        let expected = (2 * k * (k - 1)) as f64 / (2 * k * (2 * k - 1)) as f64;
        assert!((connectedness_from_sizes(&[k, k]).unwrap() - expected).abs() < 1e-12);
        assert!(connectedness_from_sizes(&[1]).is_err());
    }
}
