//! Most collaborative countries, strongest links and authorship distributions.

use std::fs::File;
use std::path::PathBuf;

use collabnet::ingest::{load_corpus, CorpusFormat, EntityRegistry};
use collabnet::netbuild::{build_graph, BuildConfig};
use collabnet::report::{authorship_distribution, strongest_links, top_entities, DistributionAxis};
use collabnet::Level;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let data = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/fixture");
    let registry = EntityRegistry::builder()
        .load_aliases(File::open(data.join("aliases.csv"))?)?
        .load_institute_countries(File::open(data.join("institute_countries.csv"))?)?
        .build()?;
    let corpus = load_corpus(File::open(data.join("corpus.jsonl"))?, CorpusFormat::Jsonl, &registry)?;
    let g = build_graph(&corpus.records, &BuildConfig::new(Level::Country));

    println!("{:>4}  {:<16} {:>5} {:>5}", "rank", "country", "# Col", "# Cnt");
    for r in top_entities(&g, 5).rows {
        println!(
            "{:>4}  {:<16} {:>5} {:>5}",
            r.rank,
            r.entity,
            r.total_collaborations,
            r.collaborator_count.unwrap_or(0)
        );
    }

    let links = strongest_links(&g, 3);
    println!("\nstrongest links:");
    for r in &links.rows {
        println!(
            "{:>4}  {} -- {}: {}",
            r.rank,
            r.entity,
            r.partner.as_deref().unwrap_or(""),
            r.total_collaborations
        );
    }
    println!(
        "the top {} links carry {:.1}% of all collaboration weight",
        links.rows.len(),
        100.0 * links.concentration.unwrap_or(0.0)
    );

    for axis in [
        DistributionAxis::AuthorsPerPub,
        DistributionAxis::InstitutesPerPub,
        DistributionAxis::CountriesPerPub,
    ] {
        println!("\n{axis:?}:");
        for row in authorship_distribution(&corpus.records, axis).rows {
            println!(
                "  {:>2}: {:>3} publications ({:.1}%)",
                row.count,
                row.publications,
                100.0 * row.share
            );
        }
    }
    Ok(())
}
