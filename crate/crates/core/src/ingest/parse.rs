//! Corpus readers for the JSONL interchange format and the flat CSV adapter.

use std::collections::HashMap;
use std::io::{BufRead, BufReader, Read};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::record::{clean_name, Affiliation, AuthorEntry, PublicationRecord, MAX_YEAR, MIN_YEAR};
use super::IngestError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusFormat {
    Jsonl,
    Csv,
}

impl CorpusFormat {
    /// Guesses the format from a file extension; anything other than `.csv` is JSONL.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("csv") => CorpusFormat::Csv,
            _ => CorpusFormat::Jsonl,
        }
    }
}

/// A row that could not be turned into (part of) a record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowError {
    pub line: usize,
    pub id: Option<String>,
    pub message: String,
}

/// A row that was kept but needed cleaning.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowFlag {
    pub line: usize,
    pub id: String,
    pub message: String,
}

#[derive(Debug, Clone, Default)]
pub struct ParseOutcome {
    pub records: Vec<PublicationRecord>,
    pub errors: Vec<RowError>,
    pub flags: Vec<RowFlag>,
}

pub fn parse_corpus<R: Read>(reader: R, format: CorpusFormat) -> Result<ParseOutcome, IngestError> {
    match format {
        CorpusFormat::Jsonl => parse_jsonl(reader),
        CorpusFormat::Csv => parse_csv(reader),
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawYear {
    Int(i64),
    Text(String),
}

#[derive(Deserialize)]
struct RawAffiliation {
    #[serde(default)]
    institute: Option<String>,
    #[serde(default)]
    country: Option<String>,
}

#[derive(Deserialize)]
struct RawAuthor {
    name: Option<String>,
    #[serde(default)]
    affiliations: Vec<RawAffiliation>,
}

#[derive(Deserialize)]
struct RawRecord {
    id: Option<String>,
    #[serde(default)]
    title: Option<String>,
    year: Option<RawYear>,
    #[serde(default)]
    journal: Option<String>,
    authors: Option<Vec<RawAuthor>>,
    #[serde(default)]
    keywords: Vec<String>,
}

fn parse_year(raw: &RawYear) -> Result<i32, String> {
    let value = match raw {
        RawYear::Int(v) => *v,
        RawYear::Text(s) => s.trim().parse::<i64>().map_err(|_| format!("unparseable year {s:?}"))?,
    };
    if value < MIN_YEAR as i64 || value > MAX_YEAR as i64 {
        return Err(format!("year {value} outside [{MIN_YEAR}, {MAX_YEAR}]"));
    }
    Ok(value as i32)
}

struct IdTracker {
    seen: HashMap<String, usize>,
}

impl IdTracker {
    fn new() -> Self {
        IdTracker { seen: HashMap::new() }
    }

    fn claim(&mut self, id: &str, line: usize) -> Result<(), IngestError> {
        if let Some(&first_line) = self.seen.get(id) {
            return Err(IngestError::DuplicateId {
                id: id.to_owned(),
                first_line,
                second_line: line,
            });
        }
        self.seen.insert(id.to_owned(), line);
        Ok(())
    }
}

fn parse_jsonl<R: Read>(reader: R) -> Result<ParseOutcome, IngestError> {
    let mut out = ParseOutcome::default();
    let mut ids = IdTracker::new();
    for (idx, line) in BufReader::new(reader).lines().enumerate() {
        let line_no = idx + 1;
        let line = line.map_err(|source| IngestError::Read { line: line_no, source })?;
        if line.trim().is_empty() {
            continue;
        }
        let raw: RawRecord = match serde_json::from_str(&line) {
            Ok(raw) => raw,
            Err(e) => {
                out.errors.push(RowError {
                    line: line_no,
                    id: None,
                    message: e.to_string(),
                });
                continue;
            }
        };
        match convert_raw(raw, line_no, &mut out.flags) {
            Ok(record) => {
                ids.claim(&record.id, line_no)?;
                out.records.push(record);
            }
            Err(err) => out.errors.push(err),
        }
    }
    Ok(out)
}

fn convert_raw(raw: RawRecord, line: usize, flags: &mut Vec<RowFlag>) -> Result<PublicationRecord, RowError> {
    let id = raw.id.as_deref().and_then(clean_name);
    let fail = |message: String| RowError {
        line,
        id: id.clone(),
        message,
    };
    let Some(record_id) = id.clone() else {
        return Err(fail("missing or empty id".into()));
    };
    let year = match &raw.year {
        None => return Err(fail("missing year".into())),
        Some(y) => parse_year(y).map_err(&fail)?,
    };
    let raw_authors = match raw.authors {
        Some(a) if !a.is_empty() => a,
        _ => return Err(fail("record has no authors".into())),
    };

    let mut authors: Vec<AuthorEntry> = Vec::with_capacity(raw_authors.len());
    for ra in raw_authors {
        let Some(name) = ra.name.as_deref().and_then(clean_name) else {
            return Err(fail("author with empty name".into()));
        };
        if authors.iter().any(|a| a.name == name) {
            return Err(fail(format!("author {name:?} listed twice")));
        }
        let mut affiliations = Vec::with_capacity(ra.affiliations.len());
        for aff in ra.affiliations {
            let cleaned = Affiliation {
                institute: aff.institute.as_deref().and_then(clean_name),
                country: aff.country.as_deref().and_then(clean_name),
            };
            if cleaned.is_empty() {
                flags.push(RowFlag {
                    line,
                    id: record_id.clone(),
                    message: format!("dropped empty affiliation of {name:?}"),
                });
            } else if !affiliations.contains(&cleaned) {
                affiliations.push(cleaned);
            }
        }
        authors.push(AuthorEntry { name, affiliations });
    }

    Ok(PublicationRecord {
        id: record_id,
        title: raw.title.unwrap_or_default(),
        year,
        journal: raw.journal.unwrap_or_default(),
        authors,
        keywords: raw.keywords,
    })
}

const CSV_COLUMNS: [&str; 7] = ["id", "title", "year", "journal", "author", "institute", "country"];

fn parse_csv<R: Read>(reader: R) -> Result<ParseOutcome, IngestError> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(false)
        .from_reader(reader);
    let headers = rdr.headers()?.clone();
    let mut column = [0usize; 7];
    for (slot, name) in column.iter_mut().zip(CSV_COLUMNS) {
        *slot = headers
            .iter()
            .position(|h| h.trim() == name)
            .ok_or_else(|| IngestError::MissingColumn(name.to_owned()))?;
    }
    let [c_id, c_title, c_year, c_journal, c_author, c_inst, c_country] = column;

    let mut out = ParseOutcome::default();
    let mut index: HashMap<String, usize> = HashMap::new();
    for row in rdr.records() {
        let row = match row {
            Ok(r) => r,
            Err(e) => {
                let line = e.position().map(|p| p.line() as usize).unwrap_or(0);
                if matches!(e.kind(), csv::ErrorKind::Utf8 { .. } | csv::ErrorKind::Io(_)) {
                    return Err(IngestError::Csv(e));
                }
                out.errors.push(RowError {
                    line,
                    id: None,
                    message: e.to_string(),
                });
                continue;
            }
        };
        let line = row.position().map(|p| p.line() as usize).unwrap_or(0);
        let id = clean_name(&row[c_id]);
        let fail = |message: String| RowError {
            line,
            id: id.clone(),
            message,
        };
        let Some(record_id) = id.clone() else {
            out.errors.push(fail("missing or empty id".into()));
            continue;
        };
        let year = match parse_year(&RawYear::Text(row[c_year].to_owned())) {
            Ok(y) => y,
            Err(msg) => {
                out.errors.push(fail(msg));
                continue;
            }
        };
        let Some(author) = clean_name(&row[c_author]) else {
            out.errors.push(fail("author with empty name".into()));
            continue;
        };
        let title = row[c_title].trim().to_owned();
        let journal = row[c_journal].trim().to_owned();

        let slot = match index.get(&record_id) {
            Some(&slot) => {
                let existing = &out.records[slot];
                if existing.year != year || existing.title != title || existing.journal != journal {
                    out.errors.push(fail(
                        "row disagrees with earlier rows of the same id on title/year/journal".into(),
                    ));
                    continue;
                }
                slot
            }
            None => {
                index.insert(record_id.clone(), out.records.len());
                out.records.push(PublicationRecord {
                    id: record_id,
                    title,
                    year,
                    journal,
                    authors: Vec::new(),
                    keywords: Vec::new(),
                });
                out.records.len() - 1
            }
        };

        let record = &mut out.records[slot];
        let pos = match record.authors.iter().position(|a| a.name == author) {
            Some(p) => p,
            None => {
                record.authors.push(AuthorEntry::new(author, Vec::new()));
                record.authors.len() - 1
            }
        };
        let aff = Affiliation {
            institute: clean_name(&row[c_inst]),
            country: clean_name(&row[c_country]),
        };
        let entry = &mut record.authors[pos];
        if !aff.is_empty() && !entry.affiliations.contains(&aff) {
            entry.affiliations.push(aff);
        }
    }
    Ok(out)
}
