//! Write the country graph as DOT, GraphML and an edge list into a directory.
//!
//! cargo run --example export_graph [OUT_DIR]

use std::fs::File;
use std::path::PathBuf;

use collabnet::ingest::{load_corpus, CorpusFormat, EntityRegistry};
use collabnet::netbuild::{build_graph, BuildConfig};
use collabnet::report::{export_graph, ExportFormat};
use collabnet::Level;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let data = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/fixture");
    let out_dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(std::env::temp_dir);
    let registry = EntityRegistry::builder()
        .load_aliases(File::open(data.join("aliases.csv"))?)?
        .load_institute_countries(File::open(data.join("institute_countries.csv"))?)?
        .with_default_regions()?
        .build()?;
    let corpus = load_corpus(File::open(data.join("corpus.jsonl"))?, CorpusFormat::Jsonl, &registry)?;
    let mut g = build_graph(&corpus.records, &BuildConfig::new(Level::Country));
    g.annotate_regions(&registry);

    for (format, file) in [
        (ExportFormat::Dot, "countries.dot"),
        (ExportFormat::Graphml, "countries.graphml"),
        (ExportFormat::EdgeCsv, "countries.csv"),
    ] {
        let path = out_dir.join(file);
        std::fs::write(&path, export_graph(&g, format))?;
        println!("wrote {}", path.display());
    }
    print!("\n{}", String::from_utf8(export_graph(&g, ExportFormat::Dot))?);
    Ok(())
}
