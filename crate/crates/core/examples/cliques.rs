//! Maximal cliques of the institute graph and the institutes shared between them.

use std::fs::File;
use std::path::PathBuf;

use collabnet::ingest::{load_corpus, CorpusFormat, EntityRegistry};
use collabnet::metrics::{maximal_cliques, Parallelism};
use collabnet::netbuild::{build_graph, BuildConfig};
use collabnet::report::clique_overlaps;
use collabnet::Level;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let data = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/fixture");
    let registry = EntityRegistry::builder()
        .load_aliases(File::open(data.join("aliases.csv"))?)?
        .load_institute_countries(File::open(data.join("institute_countries.csv"))?)?
        .build()?;
    let corpus = load_corpus(File::open(data.join("corpus.jsonl"))?, CorpusFormat::Jsonl, &registry)?;
    let g = build_graph(&corpus.records, &BuildConfig::new(Level::Institute));

    let min_size = std::env::args().nth(1).map_or(Ok(3), |s| s.parse())?;
    let cliques = maximal_cliques(&g, min_size, Parallelism::from_env())?;
    println!("{} maximal cliques with at least {min_size} institutes", cliques.len());
    for (i, c) in cliques.iter().enumerate() {
        println!("  [{i}] ({}) {}", c.len(), c.members.join(", "));
    }
    println!("\ninstitutes in more than one clique:");
    for o in clique_overlaps(&cliques) {
        println!("  {} -> {:?}", o.node, o.cliques);
    }
    Ok(())
}
