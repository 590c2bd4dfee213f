//! Catalogs of construction marks.
//!
//! A catalog is loaded from a UTF-8 tab-separated table:
//! `family <TAB> mark string <TAB> series note [<TAB> bearing]`.
//! Blank lines and lines starting with `#` are ignored.

mod mark;

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use mark::{parse_mark_string, render_mark_string, Dims, MarkFragment, ParseError, ParsedMark, UNMARKED_PREFIX};

const BUILTIN: &str = include_str!("../../data/catalog.tsv");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Column,
    Opening,
    Lintel,
    Transom,
    Beam,
    Slab,
    Footing,
    FoundationBeam,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Column,
        Family::Opening,
        Family::Lintel,
        Family::Transom,
        Family::Beam,
        Family::Slab,
        Family::Footing,
        Family::FoundationBeam,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Column => "column",
            Family::Opening => "opening",
            Family::Lintel => "lintel",
            Family::Transom => "transom",
            Family::Beam => "beam",
            Family::Slab => "slab",
            Family::Footing => "footing",
            Family::FoundationBeam => "foundation_beam",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| format!("unknown family `{s}`"))
    }
}

/// Plan directions in which beams may rest on a column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bearing {
    pub x: bool,
    pub y: bool,
}

impl Bearing {
    pub fn allows(self, along_x: bool) -> bool {
        if along_x {
            self.x
        } else {
            self.y
        }
    }
}

impl FromStr for Bearing {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "X" => Ok(Bearing { x: true, y: false }),
            "Y" => Ok(Bearing { x: false, y: true }),
            "XY" | "YX" => Ok(Bearing { x: true, y: true }),
            other => Err(format!("bad bearing `{other}`, expected X, Y or XY")),
        }
    }
}

impl fmt::Display for Bearing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.x, self.y) {
            (true, true) => f.write_str("XY"),
            (true, false) => f.write_str("X"),
            (false, true) => f.write_str("Y"),
            (false, false) => f.write_str("-"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MarkRecord {
    pub family: Family,
    pub name: String,
    pub dims: Dims,
    pub metric: Option<String>,
    pub series_note: String,
    pub bearing: Option<Bearing>,
}

impl MarkRecord {
    pub fn fragment(&self) -> MarkFragment {
        MarkFragment {
            name: self.name.clone(),
            dims: self.dims.clone(),
            metric: self.metric.clone(),
        }
    }

    /// Canonical mark string, e.g. `1БФ6-5 (5050 x 200 x 300, 0.27)`.
    pub fn mark_string(&self) -> String {
        self.fragment().to_string()
    }
}

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("line {line}: {source}")]
    Mark { line: usize, source: ParseError },
    #[error("line {line}: duplicate {family} mark `{name}`")]
    Duplicate { line: usize, family: Family, name: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Immutable set of mark records, grouped by family in file order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Catalog {
    records: Vec<MarkRecord>,
}

impl Catalog {
    /// The sample catalog compiled into the crate.
    pub fn builtin() -> Catalog {
        Catalog::parse(BUILTIN).expect("builtin catalog is well formed")
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Catalog, CatalogError> {
        let text = std::fs::read_to_string(path)?;
        Catalog::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Catalog, CatalogError> {
        let mut records: Vec<MarkRecord> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            if raw.trim().is_empty() || raw.trim_start().starts_with('#') {
                continue;
            }
            let cols: Vec<&str> = raw.split('\t').collect();
            if !(3..=4).contains(&cols.len()) {
                return Err(CatalogError::Line { line, message: format!("expected 3 or 4 tab-separated fields, got {}", cols.len()) });
            }
            let family: Family = cols[0].trim().parse().map_err(|message| CatalogError::Line { line, message })?;
            let fragment = match parse_mark_string(cols[1]).map_err(|source| CatalogError::Mark { line, source })? {
                ParsedMark::Marked(m) => m,
                ParsedMark::Unmarked => {
                    return Err(CatalogError::Line { line, message: "unmarked designation is not a catalog record".into() })
                }
            };
            let bearing = match cols.get(3) {
                Some(b) if !b.trim().is_empty() => {
                    if family != Family::Column {
                        return Err(CatalogError::Line { line, message: "bearing table is only valid for columns".into() });
                    }
                    Some(b.parse().map_err(|message| CatalogError::Line { line, message })?)
                }
                _ => None,
            };
            if records.iter().any(|r| r.family == family && r.name == fragment.name) {
                return Err(CatalogError::Duplicate { line, family, name: fragment.name });
            }
            records.push(MarkRecord {
                family,
                name: fragment.name,
                dims: fragment.dims,
                metric: fragment.metric,
                series_note: cols[2].trim().to_string(),
                bearing,
            });
        }
        Ok(Catalog { records })
    }

    /// Exact-name lookup within one family.
    pub fn lookup(&self, family: Family, name: &str) -> Option<&MarkRecord> {
        self.records.iter().find(|r| r.family == family && r.name == name)
    }

    pub fn family(&self, family: Family) -> impl Iterator<Item = &MarkRecord> {
        self.records.iter().filter(move |r| r.family == family)
    }

    pub fn records(&self) -> &[MarkRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Serializes back to the tab-separated file format.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(r.family.as_str());
            out.push('\t');
            out.push_str(&r.mark_string());
            out.push('\t');
            out.push_str(&r.series_note);
            if let Some(b) = r.bearing {
                out.push('\t');
                out.push_str(&b.to_string());
            }
            out.push('\n');
        }
        out
    }
}
