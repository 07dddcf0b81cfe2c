//! Load the bundled fixture corpus, resolve aliases and fill missing countries.
//!
//! cargo run --example ingest_corpus [CORPUS]

use std::fs::File;
use std::path::PathBuf;

use collabnet::ingest::{corpus_stats, load_corpus, CorpusFormat, EntityRegistry};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let data = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/fixture");
    let corpus_path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or(data.join("corpus.jsonl"));

    let registry = EntityRegistry::builder()
        .load_aliases(File::open(data.join("aliases.csv"))?)?
        .load_institute_countries(File::open(data.join("institute_countries.csv"))?)?
        .with_default_regions()?
        .build()?;

    let corpus = load_corpus(
        File::open(&corpus_path)?,
        CorpusFormat::from_path(&corpus_path),
        &registry,
    )?;
    for e in &corpus.row_errors {
        eprintln!("skipped line {}: {}", e.line, e.message);
    }

    let s = corpus_stats(&corpus.records);
    println!("papers      {}", s.papers);
    println!("authors     {}", s.authors);
    println!("institutes  {}", s.institutes);
    println!("countries   {}", s.countries);
    println!("multi-affiliation authors   {}", s.multi_affiliation_authors);
    println!("authors without affiliation {}", s.authors_without_affiliation);
    println!();
    println!(
        "alias rewrites: {} author, {} institute, {} country",
        corpus.merges.authors, corpus.merges.institutes, corpus.merges.countries
    );
    println!(
        "missing countries: {} records, {} filled from the institute map, {} unresolved",
        corpus.inference.records_missing_country, corpus.inference.filled, corpus.inference.unresolved
    );
    println!();
    println!("year  publications");
    for y in &s.per_year {
        println!("{}  {}", y.year, y.publications);
    }
    Ok(())
}
