//! Project the fixture corpus into author, institute and country graphs, and
//! compare the two edge-weight policies and a restricted year window.

use std::fs::File;
use std::path::PathBuf;

use collabnet::ingest::{load_corpus, CorpusFormat, EntityRegistry};
use collabnet::netbuild::{build_graph, BuildConfig, EdgeWeightPolicy, YearWindow};
use collabnet::Level;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let data = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/fixture");
    let registry = EntityRegistry::builder()
        .load_aliases(File::open(data.join("aliases.csv"))?)?
        .load_institute_countries(File::open(data.join("institute_countries.csv"))?)?
        .with_default_regions()?
        .build()?;
    let corpus = load_corpus(File::open(data.join("corpus.jsonl"))?, CorpusFormat::Jsonl, &registry)?;

    println!(
        "{:<10} {:<16} {:>6} {:>6} {:>7}",
        "level", "policy", "nodes", "edges", "weight"
    );
    for level in Level::ALL {
        for policy in [EdgeWeightPolicy::PerPublication, EdgeWeightPolicy::PerPairOccurrence] {
            let g = build_graph(&corpus.records, &BuildConfig::new(level).policy(policy));
            let s = g.summary();
            println!(
                "{:<10} {:<16} {:>6} {:>6} {:>7}",
                level.as_str(),
                policy.as_str(),
                s.nodes,
                s.edges,
                s.total_weight
            );
        }
    }

    let window = YearWindow::new(2004, 2007)?;
    let mut g = build_graph(&corpus.records, &BuildConfig::new(Level::Country).window(Some(window)));
    g.annotate_regions(&registry);
    println!("\ncountry links {window}:");
    for (a, b, e) in g.edges() {
        println!(
            "  {a} -- {b}: {} (first {:?}, last {:?})",
            e.weight, e.first_year, e.last_year
        );
    }
    println!("\nregions:");
    for node in g.nodes() {
        let region = g
            .attributes(node)
            .and_then(|a| a.get("region"))
            .map_or("?", String::as_str);
        println!("  {node}: {region}");
    }
    Ok(())
}
