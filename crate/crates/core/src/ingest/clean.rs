use serde::Serialize;

use crate::level::Level;

use super::record::PublicationRecord;
use super::registry::EntityRegistry;

/// How many fields each alias level rewrote.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct MergeStats {
    pub authors: usize,
    pub institutes: usize,
    pub countries: usize,
}

impl MergeStats {
    pub fn total(&self) -> usize {
        self.authors + self.institutes + self.countries
    }
}

fn rewrite(registry: &EntityRegistry, level: Level, value: &mut String, counter: &mut usize) {
    let canonical = registry.resolve(level, value);
    if canonical != value.as_str() {
        *value = canonical.to_owned();
        *counter += 1;
    }
}

/// Replaces every author, institute and country string by its canonical form.
///
/// Record and author-entry counts are preserved; two aliases collapsing onto the
/// same author inside one record leave two entries with the same name, which the
/// graph builder de-duplicates.
pub fn apply_aliases(
    mut records: Vec<PublicationRecord>,
    registry: &EntityRegistry,
) -> (Vec<PublicationRecord>, MergeStats) {
    let mut stats = MergeStats::default();
    if registry.is_identity() {
        return (records, stats);
    }
    for record in &mut records {
        for author in &mut record.authors {
            rewrite(registry, Level::Author, &mut author.name, &mut stats.authors);
            for aff in &mut author.affiliations {
                if let Some(inst) = aff.institute.as_mut() {
                    rewrite(registry, Level::Institute, inst, &mut stats.institutes);
                }
                if let Some(ctry) = aff.country.as_mut() {
                    rewrite(registry, Level::Country, ctry, &mut stats.countries);
                }
            }
        }
    }
    (records, stats)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct InferenceStats {
    /// Affiliations whose country was filled from the institute map.
    pub filled: usize,
    /// Affiliations with an institute but no country that the map could not resolve.
    pub unresolved: usize,
    /// Records that had at least one affiliation missing a country before inference.
    pub records_missing_country: usize,
    /// Records still missing a country on some affiliation after inference.
    pub records_unresolved: usize,
}

/// Fills missing countries from the institute→country map. Present countries are
/// never touched.
pub fn infer_countries(
    mut records: Vec<PublicationRecord>,
    registry: &EntityRegistry,
) -> (Vec<PublicationRecord>, InferenceStats) {
    let mut stats = InferenceStats::default();
    for record in &mut records {
        let mut missing = false;
        let mut unresolved = false;
        for aff in record.authors.iter_mut().flat_map(|a| a.affiliations.iter_mut()) {
            if aff.country.is_some() {
                continue;
            }
            let Some(inst) = aff.institute.as_deref() else {
                continue;
            };
            missing = true;
            match registry.country_of(inst) {
                Some(c) => {
                    aff.country = Some(c.to_owned());
                    stats.filled += 1;
                }
                None => {
                    stats.unresolved += 1;
                    unresolved = true;
                }
            }
        }
        stats.records_missing_country += usize::from(missing);
        stats.records_unresolved += usize::from(unresolved);
    }
    (records, stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ingest::record::{Affiliation, AuthorEntry};

    fn record(affs: Vec<Affiliation>) -> PublicationRecord {
        PublicationRecord {
            id: "r".into(),
            title: String::new(),
            year: 2000,
            journal: String::new(),
            authors: vec![AuthorEntry::new("A", affs)],
            keywords: vec![],
        }
    }

    #[test]
    fn single_substitution() {
        let reg = EntityRegistry::builder()
            .alias(Level::Institute, "Univ. of Sydney", "University of Sydney")
            .build()
            .unwrap();
        let (out, stats) = apply_aliases(
            vec![record(vec![Affiliation::new(
                Some("Univ. of Sydney"),
                Some("Australia"),
            )])],
            &reg,
        );
        assert_eq!(
            out[0].authors[0].affiliations[0].institute.as_deref(),
            Some("University of Sydney")
        );
        assert_eq!(stats.total(), 1);
        assert_eq!(stats.institutes, 1);
    }

    #[test]
    fn country_merge() {
        let reg = EntityRegistry::builder()
            .alias(Level::Country, "Hong Kong", "China")
            .alias(Level::Country, "Taiwan", "China")
            .build()
            .unwrap();
        let rec = record(vec![
            Affiliation::new(Some("HKU"), Some("Hong Kong")),
            Affiliation::new(Some("NTU"), Some("Taiwan")),
            Affiliation::new(Some("Tsinghua"), Some("China")),
        ]);
        let (out, stats) = apply_aliases(vec![rec], &reg);
        assert!(out[0].affiliations().all(|a| a.country.as_deref() == Some("China")));
        assert_eq!(stats.countries, 2);
    }

    #[test]
    fn empty_registry_is_identity() {
        let rec = record(vec![Affiliation::new(Some("X"), None)]);
        let (out, stats) = apply_aliases(vec![rec.clone()], &EntityRegistry::empty());
        assert_eq!(out, vec![rec]);
        assert_eq!(stats.total(), 0);
    }

    #[test]
    fn inference_fills_and_counts() {
        let reg = EntityRegistry::builder()
            .institute_country("University of Sydney", "Australia")
            .build()
            .unwrap();
        let recs = vec![
            record(vec![Affiliation::new(Some("University of Sydney"), None)]),
            record(vec![Affiliation::new(Some("Nowhere Lab"), None)]),
            record(vec![Affiliation::new(Some("University of Sydney"), Some("Elsewhere"))]),
        ];
        let (out, stats) = infer_countries(recs, &reg);
        assert_eq!(out[0].authors[0].affiliations[0].country.as_deref(), Some("Australia"));
        assert_eq!(out[1].authors[0].affiliations[0].country, None);
        assert_eq!(out[2].authors[0].affiliations[0].country.as_deref(), Some("Elsewhere"));
        assert_eq!(stats.filled, 1);
        assert_eq!(stats.unresolved, 1);
        assert_eq!(stats.records_missing_country, 2);
        assert_eq!(stats.records_unresolved, 1);
    }
}
