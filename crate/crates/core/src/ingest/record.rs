use serde::{Deserialize, Serialize};

/// One institutional affiliation attached to an author on a publication.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
pub struct Affiliation {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub institute: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub country: Option<String>,
}

impl Affiliation {
    pub fn new(institute: Option<&str>, country: Option<&str>) -> Self {
        Affiliation {
            institute: institute.map(str::to_owned),
            country: country.map(str::to_owned),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.institute.is_none() && self.country.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuthorEntry {
    pub name: String,
    #[serde(default)]
    pub affiliations: Vec<Affiliation>,
}

impl AuthorEntry {
    pub fn new(name: impl Into<String>, affiliations: Vec<Affiliation>) -> Self {
        AuthorEntry {
            name: name.into(),
            affiliations,
        }
    }
}

/// A single publication with its ordered author list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PublicationRecord {
    pub id: String,
    #[serde(default)]
    pub title: String,
    pub year: i32,
    #[serde(default)]
    pub journal: String,
    pub authors: Vec<AuthorEntry>,
    #[serde(default)]
    pub keywords: Vec<String>,
}

pub const MIN_YEAR: i32 = 1000;
pub const MAX_YEAR: i32 = 3000;

impl PublicationRecord {
    /// Distinct author names in first-appearance order.
    pub fn author_names(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::with_capacity(self.authors.len());
        for a in &self.authors {
            if !out.contains(&a.name.as_str()) {
                out.push(&a.name);
            }
        }
        out
    }

    pub fn affiliations(&self) -> impl Iterator<Item = &Affiliation> {
        self.authors.iter().flat_map(|a| a.affiliations.iter())
    }
}

/// Trims and collapses runs of whitespace; returns `None` for blank input.
pub fn clean_name(raw: &str) -> Option<String> {
    let joined = raw.split_whitespace().collect::<Vec<_>>().join(" ");
    if joined.is_empty() {
        None
    } else {
        Some(joined)
    }
}
