//! Canonical entity names: alias maps per level, institute→country lookup and
//! country→region tags.
//!
//! Alias chains (`a → b → c`) are flattened when the registry is built, so every
//! lookup is a single map probe and resolution is idempotent.

use std::collections::BTreeMap;
use std::io::Read;

use serde::Deserialize;

use crate::level::{Level, Region};

use super::record::clean_name;

const DEFAULT_REGIONS: &str = include_str!("../../data/regions.csv");

#[derive(Debug, thiserror::Error)]
pub enum RegistryError {
    #[error("alias cycle at {level} level: {}", .cycle.join(" -> "))]
    Cycle { level: Level, cycle: Vec<String> },
    #[error("{level} alias {alias:?} maps to both {first:?} and {second:?}")]
    ConflictingAlias {
        level: Level,
        alias: String,
        first: String,
        second: String,
    },
    #[error("institute {institute:?} maps to both {first:?} and {second:?}")]
    ConflictingCountry {
        institute: String,
        first: String,
        second: String,
    },
    #[error("country {country:?} tagged with both {first} and {second}")]
    ConflictingRegion {
        country: String,
        first: Region,
        second: Region,
    },
    #[error("{file} line {line}: {message}")]
    BadRow {
        file: &'static str,
        line: usize,
        message: String,
    },
    #[error("{file}: {source}")]
    Csv {
        file: &'static str,
        #[source]
        source: csv::Error,
    },
}

/// Canonicalisation tables. Construct through [`RegistryBuilder`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EntityRegistry {
    aliases: [BTreeMap<String, String>; 3],
    institute_country: BTreeMap<String, String>,
    country_region: BTreeMap<String, Region>,
}

impl EntityRegistry {
    /// A registry with no aliases, no institute map and no regions.
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn builder() -> RegistryBuilder {
        RegistryBuilder::default()
    }

    /// Canonical form of `name` at `level`; names without an alias map to themselves.
    pub fn resolve<'a>(&'a self, level: Level, name: &'a str) -> &'a str {
        self.aliases[level.index()]
            .get(name)
            .map(String::as_str)
            .unwrap_or(name)
    }

    /// Country of a (raw or canonical) institute name, if known.
    pub fn country_of(&self, institute: &str) -> Option<&str> {
        let canonical = self.resolve(Level::Institute, institute);
        self.institute_country.get(canonical).map(String::as_str)
    }

    pub fn region_of(&self, country: &str) -> Option<Region> {
        let canonical = self.resolve(Level::Country, country);
        self.country_region.get(canonical).copied()
    }

    pub fn alias_count(&self, level: Level) -> usize {
        self.aliases[level.index()].len()
    }

    pub fn is_identity(&self) -> bool {
        self.aliases.iter().all(BTreeMap::is_empty)
    }

    pub fn institute_countries(&self) -> &BTreeMap<String, String> {
        &self.institute_country
    }

    pub fn regions(&self) -> &BTreeMap<String, Region> {
        &self.country_region
    }
}

#[derive(Debug, Clone, Default)]
pub struct RegistryBuilder {
    aliases: [Vec<(String, String)>; 3],
    institute_country: Vec<(String, String)>,
    regions: BTreeMap<String, Region>,
}

#[derive(Deserialize)]
struct AliasRow {
    level: String,
    alias: String,
    canonical: String,
}

#[derive(Deserialize)]
struct InstituteRow {
    institute: String,
    country: String,
}

#[derive(Deserialize)]
struct RegionRow {
    country: String,
    region: String,
}

fn read_rows<T: for<'de> Deserialize<'de>, R: Read>(
    reader: R,
    file: &'static str,
) -> Result<Vec<(usize, T)>, RegistryError> {
    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(reader);
    let headers = rdr
        .headers()
        .map_err(|source| RegistryError::Csv { file, source })?
        .clone();
    let mut rows = Vec::new();
    for record in rdr.records() {
        let record = record.map_err(|source| RegistryError::Csv { file, source })?;
        let line = record.position().map(|p| p.line() as usize).unwrap_or(0);
        let row = record
            .deserialize::<T>(Some(&headers))
            .map_err(|e| RegistryError::BadRow {
                file,
                line,
                message: e.to_string(),
            })?;
        rows.push((line, row));
    }
    Ok(rows)
}

fn required(value: &str, file: &'static str, line: usize, what: &str) -> Result<String, RegistryError> {
    clean_name(value).ok_or_else(|| RegistryError::BadRow {
        file,
        line,
        message: format!("empty {what}"),
    })
}

impl RegistryBuilder {
    pub fn alias(mut self, level: Level, alias: &str, canonical: &str) -> Self {
        self.push_alias(level, alias, canonical);
        self
    }

    pub fn institute_country(mut self, institute: &str, country: &str) -> Self {
        self.institute_country.push((institute.to_owned(), country.to_owned()));
        self
    }

    pub fn region(mut self, country: &str, region: Region) -> Self {
        self.regions.insert(country.to_owned(), region);
        self
    }

    fn push_alias(&mut self, level: Level, alias: &str, canonical: &str) {
        self.aliases[level.index()].push((alias.to_owned(), canonical.to_owned()));
    }

    /// Loads the bundled country→region table.
    pub fn with_default_regions(self) -> Result<Self, RegistryError> {
        self.load_regions(DEFAULT_REGIONS.as_bytes())
    }

    /// Reads an alias CSV with header `level,alias,canonical`.
    pub fn load_aliases<R: Read>(mut self, reader: R) -> Result<Self, RegistryError> {
        const FILE: &str = "alias map";
        for (line, row) in read_rows::<AliasRow, _>(reader, FILE)? {
            let level: Level = row
                .level
                .parse()
                .map_err(|e: crate::level::UnknownLevel| RegistryError::BadRow {
                    file: FILE,
                    line,
                    message: e.to_string(),
                })?;
            let alias = required(&row.alias, FILE, line, "alias")?;
            let canonical = required(&row.canonical, FILE, line, "canonical name")?;
            self.push_alias(level, &alias, &canonical);
        }
        Ok(self)
    }

    /// Reads an institute→country CSV with header `institute,country`.
    pub fn load_institute_countries<R: Read>(mut self, reader: R) -> Result<Self, RegistryError> {
        const FILE: &str = "institute-country map";
        for (line, row) in read_rows::<InstituteRow, _>(reader, FILE)? {
            let institute = required(&row.institute, FILE, line, "institute")?;
            let country = required(&row.country, FILE, line, "country")?;
            self.institute_country.push((institute, country));
        }
        Ok(self)
    }

    /// Reads a region CSV with header `country,region`. Entries override earlier ones
    /// for the same country; a country repeated with different regions inside one
    /// file is an error.
    pub fn load_regions<R: Read>(mut self, reader: R) -> Result<Self, RegistryError> {
        const FILE: &str = "region map";
        let mut seen: BTreeMap<String, Region> = BTreeMap::new();
        for (line, row) in read_rows::<RegionRow, _>(reader, FILE)? {
            let country = required(&row.country, FILE, line, "country")?;
            let region: Region = row.region.parse().map_err(|message| RegistryError::BadRow {
                file: FILE,
                line,
                message,
            })?;
            if let Some(&prev) = seen.get(&country) {
                if prev != region {
                    return Err(RegistryError::ConflictingRegion {
                        country,
                        first: prev,
                        second: region,
                    });
                }
            }
            seen.insert(country, region);
        }
        self.regions.extend(seen);
        Ok(self)
    }

    pub fn build(self) -> Result<EntityRegistry, RegistryError> {
        let mut aliases: [BTreeMap<String, String>; 3] = Default::default();
        for level in Level::ALL {
            aliases[level.index()] = flatten_aliases(level, &self.aliases[level.index()])?;
        }
        let mut registry = EntityRegistry {
            aliases,
            institute_country: BTreeMap::new(),
            country_region: BTreeMap::new(),
        };

        for (institute, country) in &self.institute_country {
            let inst = registry.resolve(Level::Institute, institute).to_owned();
            let ctry = registry.resolve(Level::Country, country).to_owned();
            match registry.institute_country.get(&inst) {
                Some(prev) if *prev != ctry => {
                    return Err(RegistryError::ConflictingCountry {
                        institute: inst,
                        first: prev.clone(),
                        second: ctry,
                    })
                }
                _ => {
                    registry.institute_country.insert(inst, ctry);
                }
            }
        }

        for (country, region) in &self.regions {
            let ctry = registry.resolve(Level::Country, country).to_owned();
            match registry.country_region.get(&ctry) {
                // A merged country keeps the tag given to its canonical name.
                Some(_) if ctry != *country => {}
                _ => {
                    registry.country_region.insert(ctry, *region);
                }
            }
        }
        Ok(registry)
    }
}

fn flatten_aliases(level: Level, pairs: &[(String, String)]) -> Result<BTreeMap<String, String>, RegistryError> {
    let mut direct: BTreeMap<&str, &str> = BTreeMap::new();
    for (alias, canonical) in pairs {
        if alias == canonical {
            continue;
        }
        if let Some(prev) = direct.insert(alias, canonical) {
            if prev != canonical {
                return Err(RegistryError::ConflictingAlias {
                    level,
                    alias: alias.clone(),
                    first: prev.to_owned(),
                    second: canonical.clone(),
                });
            }
        }
    }

    let mut flat = BTreeMap::new();
    for &start in direct.keys() {
        let mut path = vec![start];
        let mut current = start;
        while let Some(&next) = direct.get(current) {
            if let Some(pos) = path.iter().position(|&p| p == next) {
                let mut cycle: Vec<String> = path[pos..].iter().map(|s| s.to_string()).collect();
                cycle.push(next.to_owned());
                return Err(RegistryError::Cycle { level, cycle });
            }
            path.push(next);
            current = next;
        }
        flat.insert(start.to_owned(), current.to_owned());
    }
    Ok(flat)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chains_flatten() {
        let reg = EntityRegistry::builder()
            .alias(Level::Institute, "a", "b")
            .alias(Level::Institute, "b", "c")
            .build()
            .unwrap();
        assert_eq!(reg.resolve(Level::Institute, "a"), "c");
        assert_eq!(reg.resolve(Level::Institute, "b"), "c");
        assert_eq!(reg.resolve(Level::Institute, "c"), "c");
        // levels are independent
        assert_eq!(reg.resolve(Level::Country, "a"), "a");
    }

    #[test]
    fn cycle_is_reported() {
        let err = EntityRegistry::builder()
            .alias(Level::Country, "x", "y")
            .alias(Level::Country, "y", "z")
            .alias(Level::Country, "z", "x")
            .build()
            .unwrap_err();
        match err {
            RegistryError::Cycle { level, cycle } => {
                assert_eq!(level, Level::Country);
                assert_eq!(cycle, vec!["x", "y", "z", "x"]);
            }
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn conflicting_alias_rejected() {
        let err = EntityRegistry::builder()
            .alias(Level::Author, "a", "b")
            .alias(Level::Author, "a", "c")
            .build()
            .unwrap_err();
        assert!(matches!(err, RegistryError::ConflictingAlias { .. }));
    }

    #[test]
    fn institute_map_goes_through_aliases() {
        let reg = EntityRegistry::builder()
            .alias(Level::Institute, "Univ. of Sydney", "University of Sydney")
            .alias(Level::Country, "Hong Kong", "China")
            .institute_country("Univ. of Sydney", "Australia")
            .institute_country("University of Hong Kong", "Hong Kong")
            .build()
            .unwrap();
        assert_eq!(reg.country_of("University of Sydney"), Some("Australia"));
        assert_eq!(reg.country_of("University of Hong Kong"), Some("China"));
    }

    #[test]
    fn conflicting_institute_country_rejected() {
        let err = EntityRegistry::builder()
            .alias(Level::Institute, "I1", "I")
            .institute_country("I", "A")
            .institute_country("I1", "B")
            .build()
            .unwrap_err();
        assert!(matches!(err, RegistryError::ConflictingCountry { .. }));
    }

    #[test]
    fn csv_loaders() {
        let reg = EntityRegistry::builder()
            .load_aliases(
                "level,alias,canonical\ninstitute, Imperial College ,Imperial College London\ncountry,Taiwan,China\n"
                    .as_bytes(),
            )
            .unwrap()
            .load_institute_countries("institute,country\nImperial College,United Kingdom\n".as_bytes())
            .unwrap()
            .load_regions("country,region\nChina,Asia\nTaiwan,asia\n".as_bytes())
            .unwrap()
            .build()
            .unwrap();
        assert_eq!(
            reg.resolve(Level::Institute, "Imperial College"),
            "Imperial College London"
        );
        assert_eq!(reg.country_of("Imperial College London"), Some("United Kingdom"));
        assert_eq!(reg.region_of("Taiwan"), Some(Region::Asia));
    }

    #[test]
    fn bad_alias_level() {
        let err = EntityRegistry::builder()
            .load_aliases("level,alias,canonical\nplanet,a,b\n".as_bytes())
            .unwrap_err();
        assert!(matches!(err, RegistryError::BadRow { line: 2, .. }));
    }

    #[test]
    fn default_regions_load() {
        let reg = EntityRegistry::builder()
            .with_default_regions()
            .unwrap()
            .build()
            .unwrap();
        assert_eq!(reg.region_of("United States"), Some(Region::America));
        assert_eq!(reg.region_of("Australia"), Some(Region::Oceania));
        assert_eq!(reg.region_of("France"), Some(Region::Europe));
        assert_eq!(reg.region_of("Egypt"), Some(Region::Africa));
        assert_eq!(reg.region_of("China"), Some(Region::Asia));
    }
}
