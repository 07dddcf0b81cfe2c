use std::collections::BTreeMap;

use crate::ingest::{AuthorEntry, PublicationRecord};
use crate::level::Level;

use super::graph::{CollabGraph, EdgeWeightPolicy, YearWindow};

/// Which affiliations of a multi-affiliation author feed institute/country projections.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum AffiliationMode {
    /// Every listed affiliation.
    #[default]
    All,
    /// Only the first listed affiliation.
    First,
}

#[derive(Debug, Clone, Copy)]
pub struct BuildConfig {
    pub level: Level,
    pub window: Option<YearWindow>,
    pub policy: EdgeWeightPolicy,
    pub include_isolates: bool,
    pub affiliations: AffiliationMode,
}

impl BuildConfig {
    pub fn new(level: Level) -> Self {
        BuildConfig {
            level,
            window: None,
            policy: EdgeWeightPolicy::PerPublication,
            include_isolates: false,
            affiliations: AffiliationMode::All,
        }
    }

    pub fn window(mut self, window: Option<YearWindow>) -> Self {
        self.window = window;
        self
    }

    pub fn policy(mut self, policy: EdgeWeightPolicy) -> Self {
        self.policy = policy;
        self
    }

    pub fn include_isolates(mut self, yes: bool) -> Self {
        self.include_isolates = yes;
        self
    }

    pub fn affiliations(mut self, mode: AffiliationMode) -> Self {
        self.affiliations = mode;
        self
    }
}

fn author_entities(author: &AuthorEntry, level: Level, mode: AffiliationMode) -> Vec<&str> {
    let take = match mode {
        AffiliationMode::All => author.affiliations.len(),
        AffiliationMode::First => author.affiliations.len().min(1),
    };
    let mut out: Vec<&str> = Vec::new();
    for aff in &author.affiliations[..take] {
        let value = match level {
            Level::Institute => aff.institute.as_deref(),
            Level::Country => aff.country.as_deref(),
            Level::Author => unreachable!("author level handled by caller"),
        };
        if let Some(v) = value {
            if !out.contains(&v) {
                out.push(v);
            }
        }
    }
    out
}

/// Distinct entities of one record at `level`, each with the number of author
/// instances carrying it.
pub fn record_entities(record: &PublicationRecord, level: Level, mode: AffiliationMode) -> BTreeMap<&str, u64> {
    let mut counts: BTreeMap<&str, u64> = BTreeMap::new();
    match level {
        Level::Author => {
            for name in record.author_names() {
                counts.insert(name, 1);
            }
        }
        Level::Institute | Level::Country => {
            for author in &record.authors {
                for entity in author_entities(author, level, mode) {
                    *counts.entry(entity).or_default() += 1;
                }
            }
        }
    }
    counts
}

/// Projects a canonical corpus onto a collaboration graph.
pub fn build_graph(records: &[PublicationRecord], config: &BuildConfig) -> CollabGraph {
    let mut graph = CollabGraph::new(config.level).with_metadata(config.window, config.policy);
    // institute -> country -> occurrences, for node attributes
    let mut institute_countries: BTreeMap<&str, BTreeMap<&str, usize>> = BTreeMap::new();

    for record in records {
        if let Some(w) = config.window {
            if !w.contains(record.year) {
                continue;
            }
        }
        let entities = record_entities(record, config.level, config.affiliations);
        if config.include_isolates {
            for name in entities.keys() {
                graph.add_node(name);
            }
        }
        let list: Vec<(&str, u64)> = entities.into_iter().collect();
        for (i, &(a, ca)) in list.iter().enumerate() {
            for &(b, cb) in &list[i + 1..] {
                let w = match config.policy {
                    EdgeWeightPolicy::PerPublication => 1,
                    EdgeWeightPolicy::PerPairOccurrence => ca * cb,
                };
                graph
                    .add_weight(a, b, w, Some(record.year))
                    .expect("distinct entities and positive weight");
            }
        }
        if config.level == Level::Institute {
            for aff in record.affiliations() {
                if let (Some(i), Some(c)) = (aff.institute.as_deref(), aff.country.as_deref()) {
                    *institute_countries.entry(i).or_default().entry(c).or_default() += 1;
                }
            }
        }
    }

    for (inst, countries) in institute_countries {
        if !graph.contains(inst) {
            continue;
        }
        // most frequent, ties to the lexicographically smallest
        let best = countries
            .iter()
            .max_by(|x, y| x.1.cmp(y.1).then_with(|| y.0.cmp(x.0)))
            .map(|(c, _)| *c)
            .expect("non-empty");
        graph.set_attribute(inst, "country", best).expect("node present");
    }
    graph
}
