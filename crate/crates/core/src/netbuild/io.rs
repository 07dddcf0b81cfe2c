//! Weighted edge-list and node-attribute CSV (de)serialisation.

use std::io::{Read, Write};

use serde::Deserialize;

use crate::level::Level;

use super::graph::CollabGraph;
use super::GraphError;

pub fn write_edge_csv<W: Write>(graph: &CollabGraph, out: W) -> Result<(), GraphError> {
    let mut wtr = csv::Writer::from_writer(out);
    wtr.write_record(["source", "target", "weight"])?;
    for (a, b, e) in graph.edges() {
        wtr.write_record([a, b, &e.weight.to_string()])?;
    }
    wtr.flush()?;
    Ok(())
}

/// One row per attribute; nodes without attributes get a single row with an
/// empty attribute so the node set survives a round trip.
pub fn write_node_csv<W: Write>(graph: &CollabGraph, out: W) -> Result<(), GraphError> {
    let mut wtr = csv::Writer::from_writer(out);
    wtr.write_record(["node", "attribute", "value"])?;
    for node in graph.nodes() {
        let attrs = graph.attributes(node).expect("listed node");
        if attrs.is_empty() {
            wtr.write_record([node, "", ""])?;
        }
        for (k, v) in attrs {
            wtr.write_record([node, k.as_str(), v.as_str()])?;
        }
    }
    wtr.flush()?;
    Ok(())
}

#[derive(Deserialize)]
struct EdgeRow {
    source: String,
    target: String,
    weight: u64,
}

#[derive(Deserialize)]
struct NodeRow {
    node: String,
    #[serde(default)]
    attribute: String,
    #[serde(default)]
    value: String,
}

pub fn read_edge_csv<R: Read>(input: R, level: Level) -> Result<CollabGraph, GraphError> {
    let mut graph = CollabGraph::new(level);
    let mut rdr = csv::Reader::from_reader(input);
    for row in rdr.deserialize::<EdgeRow>() {
        let row = row?;
        graph.add_weight(&row.source, &row.target, row.weight, None)?;
    }
    Ok(graph)
}

/// Merges a node-attribute CSV into `graph`, adding nodes that are not yet present.
pub fn read_node_csv<R: Read>(input: R, graph: &mut CollabGraph) -> Result<(), GraphError> {
    let mut rdr = csv::Reader::from_reader(input);
    for row in rdr.deserialize::<NodeRow>() {
        let row = row?;
        graph.add_node(&row.node);
        if !row.attribute.is_empty() {
            graph.set_attribute(&row.node, &row.attribute, &row.value)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_round_trip() {
        let mut g =
            CollabGraph::from_edges(Level::Country, [("Japan", "China", 3), ("China", "United States", 125)]).unwrap();
        g.add_node("Lithuania");
        g.set_attribute("China", "region", "Asia").unwrap();

        let mut edges = Vec::new();
        write_edge_csv(&g, &mut edges).unwrap();
        assert_eq!(
            String::from_utf8(edges.clone()).unwrap(),
            "source,target,weight\nChina,Japan,3\nChina,United States,125\n"
        );
        let mut nodes = Vec::new();
        write_node_csv(&g, &mut nodes).unwrap();

        let mut back = read_edge_csv(edges.as_slice(), Level::Country).unwrap();
        read_node_csv(nodes.as_slice(), &mut back).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn self_loop_row_rejected() {
        let data = "source,target,weight\nA,A,1\n";
        assert!(matches!(
            read_edge_csv(data.as_bytes(), Level::Author),
            Err(GraphError::SelfLoop(_))
        ));
    }
}
