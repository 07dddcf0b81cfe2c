//! Reading publication metadata and canonicalising the entities it names.

mod clean;
mod parse;
mod record;
mod registry;
mod stats;

pub use clean::{apply_aliases, infer_countries, InferenceStats, MergeStats};
pub use parse::{parse_corpus, CorpusFormat, ParseOutcome, RowError, RowFlag};
pub use record::{clean_name, Affiliation, AuthorEntry, PublicationRecord, MAX_YEAR, MIN_YEAR};
pub use registry::{EntityRegistry, RegistryBuilder, RegistryError};
pub use stats::{corpus_stats, CorpusSummary, YearCount};

#[derive(Debug, thiserror::Error)]
pub enum IngestError {
    #[error("duplicate record id {id:?} on lines {first_line} and {second_line}")]
    DuplicateId {
        id: String,
        first_line: usize,
        second_line: usize,
    },
    #[error("line {line}: {source}")]
    Read {
        line: usize,
        #[source]
        source: std::io::Error,
    },
    #[error("corpus CSV is missing column {0:?}")]
    MissingColumn(String),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

/// Parse output after alias merging and country inference.
#[derive(Debug, Clone)]
pub struct CleanCorpus {
    pub records: Vec<PublicationRecord>,
    pub row_errors: Vec<RowError>,
    pub flags: Vec<RowFlag>,
    pub merges: MergeStats,
    pub inference: InferenceStats,
}

/// Runs the usual ingest sequence: parse, merge aliases, then fill countries.
pub fn load_corpus<R: std::io::Read>(
    reader: R,
    format: CorpusFormat,
    registry: &EntityRegistry,
) -> Result<CleanCorpus, IngestError> {
    let parsed = parse_corpus(reader, format)?;
    let (records, merges) = apply_aliases(parsed.records, registry);
    let (records, inference) = infer_countries(records, registry);
    Ok(CleanCorpus {
        records,
        row_errors: parsed.errors,
        flags: parsed.flags,
        merges,
        inference,
    })
}
