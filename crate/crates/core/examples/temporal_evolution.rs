//! Year-by-year activity and a two-period comparison of the country network.

use std::fs::File;
use std::path::PathBuf;

use collabnet::ingest::{load_corpus, CorpusFormat, EntityRegistry};
use collabnet::metrics::MetricsOptions;
use collabnet::netbuild::{EdgeWeightPolicy, YearWindow};
use collabnet::temporal::{period_compare, yearly_series, Period};
use collabnet::Level;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let data = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/fixture");
    let registry = EntityRegistry::builder()
        .load_aliases(File::open(data.join("aliases.csv"))?)?
        .load_institute_countries(File::open(data.join("institute_countries.csv"))?)?
        .build()?;
    let corpus = load_corpus(File::open(data.join("corpus.jsonl"))?, CorpusFormat::Jsonl, &registry)?;
    let policy = EdgeWeightPolicy::PerPublication;

    println!("year  countries  links  collaborations");
    for row in yearly_series(&corpus.records, Level::Country, policy).rows {
        println!(
            "{}  {:>9}  {:>5}  {:>14}",
            row.year, row.active_nodes, row.unique_links, row.weight_sum
        );
    }

    let periods = [
        Period::new("early", YearWindow::new(2001, 2003)?),
        Period::new("recent", YearWindow::new(2004, 2007)?),
    ];
    let cmp = period_compare(
        &corpus.records,
        Level::Country,
        &periods,
        policy,
        false,
        &MetricsOptions::default(),
    )?;
    println!();
    for p in &cmp.periods {
        print!(
            "{:<7} {}  nodes {:>2}  links {:>2}  weight {:>3}",
            p.label, p.window, p.totals.nodes, p.totals.edges, p.totals.total_weight
        );
        match &p.report {
            Some(r) => println!(
                "  density {:.1}%  clustering {:.1}%  avg distance {:.2}",
                100.0 * r.density_binary,
                100.0 * r.clustering_avg,
                r.average_distance
            ),
            None => println!("  ({})", p.undefined.as_deref().unwrap_or("undefined")),
        }
    }
    Ok(())
}
