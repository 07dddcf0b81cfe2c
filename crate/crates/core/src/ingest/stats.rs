use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::record::PublicationRecord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct YearCount {
    pub year: i32,
    pub publications: usize,
}

/// Headline counts of a canonicalised corpus.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CorpusSummary {
    pub papers: usize,
    pub authors: usize,
    pub institutes: usize,
    pub countries: usize,
    /// Authors recorded with two or more distinct institutes across the corpus.
    pub multi_affiliation_authors: usize,
    /// Authors that carry no affiliation on any of their records.
    pub authors_without_affiliation: usize,
    pub per_year: Vec<YearCount>,
}

impl CorpusSummary {
    /// The six headline counts in declaration order.
    pub fn counts(&self) -> [usize; 6] {
        [
            self.papers,
            self.authors,
            self.institutes,
            self.countries,
            self.multi_affiliation_authors,
            self.authors_without_affiliation,
        ]
    }
}

pub fn corpus_stats(records: &[PublicationRecord]) -> CorpusSummary {
    let mut institutes: BTreeSet<&str> = BTreeSet::new();
    let mut countries: BTreeSet<&str> = BTreeSet::new();
    let mut author_institutes: BTreeMap<&str, BTreeSet<&str>> = BTreeMap::new();
    let mut author_has_affiliation: BTreeMap<&str, bool> = BTreeMap::new();
    let mut per_year: BTreeMap<i32, usize> = BTreeMap::new();

    for record in records {
        *per_year.entry(record.year).or_default() += 1;
        for author in &record.authors {
            let insts = author_institutes.entry(&author.name).or_default();
            let has = author_has_affiliation.entry(&author.name).or_default();
            *has |= !author.affiliations.is_empty();
            for aff in &author.affiliations {
                if let Some(i) = aff.institute.as_deref() {
                    institutes.insert(i);
                    insts.insert(i);
                }
                if let Some(c) = aff.country.as_deref() {
                    countries.insert(c);
                }
            }
        }
    }

    CorpusSummary {
        papers: records.len(),
        authors: author_institutes.len(),
        institutes: institutes.len(),
        countries: countries.len(),
        multi_affiliation_authors: author_institutes.values().filter(|s| s.len() >= 2).count(),
        authors_without_affiliation: author_has_affiliation.values().filter(|h| !**h).count(),
        per_year: per_year
            .into_iter()
            .map(|(year, publications)| YearCount { year, publications })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ingest::record::{Affiliation, AuthorEntry};

    #[test]
    fn empty_corpus() {
        let s = corpus_stats(&[]);
        assert_eq!(s.counts(), [0; 6]);
        assert!(s.per_year.is_empty());
    }

    #[test]
    fn one_record_two_authors_shared_institute() {
        let aff = Affiliation::new(Some("I"), Some("C"));
        let rec = PublicationRecord {
            id: "p".into(),
            title: String::new(),
            year: 1990,
            journal: String::new(),
            authors: vec![
                AuthorEntry::new("A", vec![aff.clone()]),
                AuthorEntry::new("B", vec![aff]),
            ],
            keywords: vec![],
        };
        let s = corpus_stats(&[rec]);
        assert_eq!(s.counts(), [1, 2, 1, 1, 0, 0]);
        assert_eq!(
            s.per_year,
            vec![YearCount {
                year: 1990,
                publications: 1
            }]
        );
    }
}
