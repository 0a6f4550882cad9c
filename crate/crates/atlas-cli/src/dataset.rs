//! Element names and symbols, plus the observation bounds that decide each
//! house's status.
//!
//! File format: UTF-8, one `z,symbol,name` record per line, `#` comments,
//! optional `z,symbol,name` header.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::Path;

use atlas_core::AtomicNumber;
use serde::Serialize;
use thiserror::Error;

const BUNDLED: &str = include_str!("../data/elements.csv");

pub const DEFAULT_NAMED_MAX: AtomicNumber = 110;
pub const DEFAULT_OBSERVED_MAX: AtomicNumber = 116;

#[derive(Debug, Error)]
pub enum DatasetError {
    #[error("ParseError at line {line}: {message}")]
    Parse { line: u64, message: String },
    #[error("DuplicateZ at line {line}: Z={z} already defined")]
    DuplicateZ { line: u64, z: AtomicNumber },
    #[error("DuplicateSymbol at line {line}: symbol `{symbol}` already used")]
    DuplicateSymbol { line: u64, symbol: String },
    #[error("InvalidBounds: named_max {named_max} exceeds observed_max {observed_max}")]
    InvalidBounds {
        named_max: AtomicNumber,
        observed_max: AtomicNumber,
    },
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Named,
    ObservedUnnamed,
    Unobserved,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Named => "named",
            Status::ObservedUnnamed => "observed-unnamed",
            Status::Unobserved => "unobserved",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    pub symbol: String,
    pub name: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementDataset {
    entries: BTreeMap<AtomicNumber, Element>,
    named_max: AtomicNumber,
    observed_max: AtomicNumber,
}

impl Default for ElementDataset {
    fn default() -> Self {
        Self {
            entries: BTreeMap::new(),
            named_max: DEFAULT_NAMED_MAX,
            observed_max: DEFAULT_OBSERVED_MAX,
        }
    }
}

impl ElementDataset {
    /// The bundled early-2004 snapshot.
    pub fn bundled() -> Self {
        Self::parse(BUNDLED).expect("bundled dataset is valid")
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, DatasetError> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|source| DatasetError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, DatasetError> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(false)
            .comment(Some(b'#'))
            .flexible(true)
            .trim(csv::Trim::All)
            .from_reader(text.as_bytes());

        let mut dataset = Self::default();
        let mut symbols: HashMap<String, AtomicNumber> = HashMap::new();
        for (index, record) in reader.records().enumerate() {
            let record = record.map_err(|e| DatasetError::Parse {
                line: e.position().map_or(0, |p| p.line()),
                message: e.to_string(),
            })?;
            let line = record.position().map_or(0, |p| p.line());
            if index == 0 && record.get(0).is_some_and(|f| f.eq_ignore_ascii_case("z")) {
                continue;
            }
            if record.len() == 1 && record[0].is_empty() {
                continue;
            }
            if record.len() != 3 {
                return Err(DatasetError::Parse {
                    line,
                    message: format!("expected 3 fields z,symbol,name, found {}", record.len()),
                });
            }
            let z: AtomicNumber = record[0].parse().map_err(|_| DatasetError::Parse {
                line,
                message: format!("`{}` is not a positive atomic number", &record[0]),
            })?;
            if z == 0 {
                return Err(DatasetError::Parse {
                    line,
                    message: "atomic number must be at least 1".into(),
                });
            }
            let symbol = record[1].to_string();
            if symbol.is_empty() {
                return Err(DatasetError::Parse {
                    line,
                    message: "empty symbol".into(),
                });
            }
            if dataset.entries.contains_key(&z) {
                return Err(DatasetError::DuplicateZ { line, z });
            }
            if symbols.insert(symbol.clone(), z).is_some() {
                return Err(DatasetError::DuplicateSymbol { line, symbol });
            }
            dataset.entries.insert(
                z,
                Element {
                    symbol,
                    name: record[2].to_string(),
                },
            );
        }
        Ok(dataset)
    }

    pub fn with_bounds(
        mut self,
        named_max: AtomicNumber,
        observed_max: AtomicNumber,
    ) -> Result<Self, DatasetError> {
        if named_max > observed_max {
            return Err(DatasetError::InvalidBounds {
                named_max,
                observed_max,
            });
        }
        self.named_max = named_max;
        self.observed_max = observed_max;
        Ok(self)
    }

    pub fn named_max(&self) -> AtomicNumber {
        self.named_max
    }

    pub fn observed_max(&self) -> AtomicNumber {
        self.observed_max
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, z: AtomicNumber) -> Option<&Element> {
        self.entries.get(&z)
    }

    pub fn symbol(&self, z: AtomicNumber) -> Option<&str> {
        self.get(z).map(|e| e.symbol.as_str())
    }

    pub fn z_of_symbol(&self, symbol: &str) -> Option<AtomicNumber> {
        self.entries
            .iter()
            .find(|(_, e)| e.symbol.eq_ignore_ascii_case(symbol))
            .map(|(z, _)| *z)
    }

    pub fn status_of(&self, z: AtomicNumber) -> Status {
        status_of(z, self)
    }
}

pub fn status_of(z: AtomicNumber, ds: &ElementDataset) -> Status {
    if z <= ds.named_max {
        Status::Named
    } else if z <= ds.observed_max {
        Status::ObservedUnnamed
    } else {
        Status::Unobserved
    }
}
