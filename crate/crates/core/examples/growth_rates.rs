//! Growth of mean yearly collaborations per country between two periods.

use std::fs::File;
use std::path::PathBuf;

use collabnet::ingest::{load_corpus, CorpusFormat, EntityRegistry};
use collabnet::netbuild::{EdgeWeightPolicy, YearWindow};
use collabnet::temporal::growth_rates;
use collabnet::Level;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let data = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/fixture");
    let registry = EntityRegistry::builder()
        .load_aliases(File::open(data.join("aliases.csv"))?)?
        .load_institute_countries(File::open(data.join("institute_countries.csv"))?)?
        .build()?;
    let corpus = load_corpus(File::open(data.join("corpus.jsonl"))?, CorpusFormat::Jsonl, &registry)?;

    let early = YearWindow::new(2001, 2003)?;
    let recent = YearWindow::new(2004, 2007)?;
    let table = growth_rates(
        &corpus.records,
        Level::Country,
        early,
        recent,
        EdgeWeightPolicy::PerPublication,
        1,
    )?;

    println!(
        "{:<16} {:>7} {:>10} {:>10}",
        "country",
        "growth",
        recent.to_string(),
        early.to_string()
    );
    for r in &table.rows {
        println!(
            "{:<16} {:>7.2} {:>10.2} {:>10.2}",
            r.entity, r.growth, r.av_recent, r.av_early
        );
    }
    println!("\nnew in {recent}: {}", table.new_entrants.join(", "));
    Ok(())
}
