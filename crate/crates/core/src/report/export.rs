//! Graph export for external drawing tools.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::netbuild::{write_edge_csv, CollabGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    EdgeCsv,
    Dot,
    Graphml,
}

impl FromStr for ExportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" | "edge_csv" | "edge-csv" => Ok(ExportFormat::EdgeCsv),
            "dot" => Ok(ExportFormat::Dot),
            "graphml" => Ok(ExportFormat::Graphml),
            _ => Err(format!("unknown export format {s:?} (expected csv, dot or graphml)")),
        }
    }
}

/// Pen width given to the heaviest edge in DOT output; others scale linearly.
pub const MAX_PEN_WIDTH: f64 = 8.0;

pub fn export_graph(g: &CollabGraph, format: ExportFormat) -> Vec<u8> {
    match format {
        ExportFormat::EdgeCsv => {
            let mut buf = Vec::new();
            write_edge_csv(g, &mut buf).expect("writing to memory");
            buf
        }
        ExportFormat::Dot => to_dot(g).into_bytes(),
        ExportFormat::Graphml => to_graphml(g).into_bytes(),
    }
}

fn dot_quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

pub fn to_dot(g: &CollabGraph) -> String {
    let max_weight = g.edges().map(|(_, _, e)| e.weight).max().unwrap_or(1) as f64;
    let mut out = String::new();
    writeln!(out, "graph {} {{", dot_quote(g.level().as_str())).unwrap();
    for node in g.nodes() {
        let attrs = g.attributes(node).expect("listed node");
        if attrs.is_empty() {
            writeln!(out, "  {};", dot_quote(node)).unwrap();
        } else {
            let list: Vec<String> = attrs.iter().map(|(k, v)| format!("{}={}", k, dot_quote(v))).collect();
            writeln!(out, "  {} [{}];", dot_quote(node), list.join(", ")).unwrap();
        }
    }
    for (a, b, e) in g.edges() {
        let pen = MAX_PEN_WIDTH * e.weight as f64 / max_weight;
        writeln!(
            out,
            "  {} -- {} [weight={}, penwidth={:.3}];",
            dot_quote(a),
            dot_quote(b),
            e.weight,
            pen
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

fn xml_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

pub fn to_graphml(g: &CollabGraph) -> String {
    let keys: BTreeSet<&str> = g
        .nodes()
        .flat_map(|n| g.attributes(n).expect("listed node").keys().map(String::as_str))
        .collect();
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str("<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n");
    for k in &keys {
        let k = xml_escape(k);
        writeln!(
            out,
            "  <key id=\"n_{k}\" for=\"node\" attr.name=\"{k}\" attr.type=\"string\"/>"
        )
        .unwrap();
    }
    out.push_str("  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"long\"/>\n");
    writeln!(out, "  <graph id=\"{}\" edgedefault=\"undirected\">", g.level()).unwrap();
    for node in g.nodes() {
        let attrs = g.attributes(node).expect("listed node");
        if attrs.is_empty() {
            writeln!(out, "    <node id=\"{}\"/>", xml_escape(node)).unwrap();
            continue;
        }
        writeln!(out, "    <node id=\"{}\">", xml_escape(node)).unwrap();
        for (k, v) in attrs {
            writeln!(out, "      <data key=\"n_{}\">{}</data>", xml_escape(k), xml_escape(v)).unwrap();
        }
        out.push_str("    </node>\n");
    }
    for (a, b, e) in g.edges() {
        writeln!(
            out,
            "    <edge source=\"{}\" target=\"{}\"><data key=\"weight\">{}</data></edge>",
            xml_escape(a),
            xml_escape(b),
            e.weight
        )
        .unwrap();
    }
    out.push_str("  </graph>\n</graphml>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::level::Level;
    use crate::netbuild::read_edge_csv;

    fn one_edge() -> CollabGraph {
        let mut g = CollabGraph::from_edges(Level::Country, [("China", "United States", 4)]).unwrap();
        g.set_attribute("China", "region", "Asia").unwrap();
        g
    }

    #[test]
    fn dot_has_node_and_edge_lines() {
        let dot = to_dot(&one_edge());
        assert_eq!(
            dot,
            "graph \"country\" {\n  \"China\" [region=\"Asia\"];\n  \"United States\";\n  \"China\" -- \"United States\" [weight=4, penwidth=8.000];\n}\n"
        );
    }

    #[test]
    fn pen_width_proportional() {
        let g = CollabGraph::from_edges(Level::Country, [("a", "b", 4), ("b", "c", 1)]).unwrap();
        let dot = to_dot(&g);
        assert!(dot.contains("penwidth=8.000"));
        assert!(dot.contains("penwidth=2.000"));
    }

    #[test]
    fn graphml_escapes() {
        let g = CollabGraph::from_edges(Level::Institute, [("A&B <Lab>", "C", 2)]).unwrap();
        let xml = to_graphml(&g);
        assert!(xml.contains("<node id=\"A&amp;B &lt;Lab&gt;\"/>"));
        assert!(xml.contains("<data key=\"weight\">2</data>"));
    }

    #[test]
    fn edge_csv_round_trip() {
        let g = one_edge();
        let bytes = export_graph(&g, ExportFormat::EdgeCsv);
        let back = read_edge_csv(bytes.as_slice(), Level::Country).unwrap();
        assert_eq!(back.summary(), g.summary());
        assert_eq!(back.weight("China", "United States"), Some(4));
    }
}
