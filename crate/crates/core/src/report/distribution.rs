use std::collections::{BTreeMap, BTreeSet};
use std::str::FromStr;

use serde::Serialize;

use crate::ingest::PublicationRecord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DistributionAxis {
    AuthorsPerPub,
    InstitutesPerPub,
    CountriesPerPub,
}

impl FromStr for DistributionAxis {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "authors" | "authors_per_pub" => Ok(DistributionAxis::AuthorsPerPub),
            "institutes" | "institutes_per_pub" => Ok(DistributionAxis::InstitutesPerPub),
            "countries" | "countries_per_pub" => Ok(DistributionAxis::CountriesPerPub),
            _ => Err(format!(
                "unknown axis {s:?} (expected authors, institutes or countries)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistributionRow {
    pub count: usize,
    pub publications: usize,
    pub share: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistributionTable {
    pub axis: DistributionAxis,
    pub rows: Vec<DistributionRow>,
}

fn distinct_count(record: &PublicationRecord, axis: DistributionAxis) -> usize {
    match axis {
        DistributionAxis::AuthorsPerPub => record.author_names().len(),
        DistributionAxis::InstitutesPerPub => record
            .affiliations()
            .filter_map(|a| a.institute.as_deref())
            .collect::<BTreeSet<_>>()
            .len(),
        DistributionAxis::CountriesPerPub => record
            .affiliations()
            .filter_map(|a| a.country.as_deref())
            .collect::<BTreeSet<_>>()
            .len(),
    }
}

/// Histogram of distinct authors / institutes / countries per publication.
pub fn authorship_distribution(records: &[PublicationRecord], axis: DistributionAxis) -> DistributionTable {
    let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
    for r in records {
        *hist.entry(distinct_count(r, axis)).or_default() += 1;
    }
    let total = records.len() as f64;
    DistributionTable {
        axis,
        rows: hist
            .into_iter()
            .map(|(count, publications)| DistributionRow {
                count,
                publications,
                share: publications as f64 / total,
            })
            .collect(),
    }
}
