use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Aggregation level of a collaboration network.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    /// Individual authors (micro level).
    Author,
    /// Institutes (meso level).
    Institute,
    /// Countries (macro level).
    Country,
}

impl Level {
    pub const ALL: [Level; 3] = [Level::Author, Level::Institute, Level::Country];

    pub fn as_str(self) -> &'static str {
        match self {
            Level::Author => "author",
            Level::Institute => "institute",
            Level::Country => "country",
        }
    }

    pub(crate) fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown level {0:?} (expected author, institute or country)")]
pub struct UnknownLevel(pub String);

impl FromStr for Level {
    type Err = UnknownLevel;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "author" => Ok(Level::Author),
            "institute" => Ok(Level::Institute),
            "country" => Ok(Level::Country),
            _ => Err(UnknownLevel(s.to_owned())),
        }
    }
}

/// Continental grouping used to colour country nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Region {
    America,
    Oceania,
    Africa,
    Asia,
    Europe,
}

impl Region {
    pub fn as_str(self) -> &'static str {
        match self {
            Region::America => "America",
            Region::Oceania => "Oceania",
            Region::Africa => "Africa",
            Region::Asia => "Asia",
            Region::Europe => "Europe",
        }
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Region {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "america" => Ok(Region::America),
            "oceania" => Ok(Region::Oceania),
            "africa" => Ok(Region::Africa),
            "asia" => Ok(Region::Asia),
            "europe" => Ok(Region::Europe),
            _ => Err(format!("unknown region {s:?}")),
        }
    }
}
