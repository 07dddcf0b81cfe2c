//! Whole-network measures and per-node centralities for the country graph.

use std::fs::File;
use std::path::PathBuf;

use collabnet::ingest::{load_corpus, CorpusFormat, EntityRegistry};
use collabnet::metrics::{full_report, node_centralities, MetricsOptions, Parallelism};
use collabnet::netbuild::{build_graph, BuildConfig};
use collabnet::Level;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let data = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/fixture");
    let registry = EntityRegistry::builder()
        .load_aliases(File::open(data.join("aliases.csv"))?)?
        .load_institute_countries(File::open(data.join("institute_countries.csv"))?)?
        .build()?;
    let corpus = load_corpus(File::open(data.join("corpus.jsonl"))?, CorpusFormat::Jsonl, &registry)?;

    let level = std::env::args().nth(1).map_or(Ok(Level::Country), |s| s.parse())?;
    let g = build_graph(&corpus.records, &BuildConfig::new(level));
    let r = full_report(&g, &MetricsOptions::default())?;

    println!(
        "{} network: {} nodes, {} links",
        level.as_str(),
        g.node_count(),
        g.edge_count()
    );
    println!("density (binary)      {:.1}%", 100.0 * r.density_binary);
    println!("density (weighted)    {:.1}%", 100.0 * r.density_weighted);
    println!("connectedness         {:.1}%", 100.0 * r.connectedness);
    println!("clustering            {:.1}%", 100.0 * r.clustering_avg);
    println!("components            {:?}", r.component_sizes);
    println!("average distance      {:.2}", r.average_distance);
    println!(
        "centralization        degree {:.1}%  closeness {:.1}%  betweenness {:.1}%",
        100.0 * r.centralization_degree,
        100.0 * r.centralization_closeness,
        100.0 * r.centralization_betweenness
    );

    println!(
        "\n{:<26} {:>4} {:>6} {:>9} {:>11} {:>10}",
        "node", "deg", "w.deg", "closeness", "betweenness", "clustering"
    );
    for n in node_centralities(&g, Parallelism::from_env()) {
        let clustering = n.clustering.map_or("-".to_string(), |c| format!("{c:.3}"));
        println!(
            "{:<26} {:>4} {:>6} {:>9.3} {:>11.3} {:>10}",
            n.node, n.degree, n.weighted_degree, n.closeness, n.betweenness, clustering
        );
    }
    Ok(())
}
