//! The expected-table fixture file.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::analysis::TableRow;
use crate::error::{Error, Result};

/// The fixture file shipped with the crate.
pub const EXPECTED_TABLES: &str = include_str!("../../fixtures/expected_tables.txt");

/// Fixture format version understood by [`parse_fixtures`].
pub const FIXTURE_FORMAT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Provenance {
    /// Copied from a published table.
    Paper,
    /// Computed by an independent brute-force oracle.
    Derived,
    /// Published but not reproducible here; reported, never failed.
    Unverified,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CheckMode {
    /// Build the group and compare all six columns.
    Full,
    /// Compare against the partition formulas only (group too large).
    Formula,
    /// Full comparison against a group that is only a candidate for the
    /// one the row describes.
    Candidate,
    /// No check.
    Skip,
}

impl FromStr for Provenance {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "PAPER" => Ok(Provenance::Paper),
            "DERIVED" => Ok(Provenance::Derived),
            "UNVERIFIED" => Ok(Provenance::Unverified),
            other => Err(format!("unknown provenance '{other}'")),
        }
    }
}

impl FromStr for CheckMode {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "full" => Ok(CheckMode::Full),
            "formula" => Ok(CheckMode::Formula),
            "candidate" => Ok(CheckMode::Candidate),
            "skip" => Ok(CheckMode::Skip),
            other => Err(format!("unknown check mode '{other}'")),
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Paper => "PAPER",
            Provenance::Derived => "DERIVED",
            Provenance::Unverified => "UNVERIFIED",
        })
    }
}

impl fmt::Display for CheckMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckMode::Full => "full",
            CheckMode::Formula => "formula",
            CheckMode::Candidate => "candidate",
            CheckMode::Skip => "skip",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureRow {
    pub id: String,
    /// `None` when the row has no constructible group (`-`).
    pub spec: Option<String>,
    pub expected: TableRow,
    pub provenance: Provenance,
    pub check: CheckMode,
    /// 1-based line in the fixture file.
    pub line: usize,
}

impl FixtureRow {
    pub fn verified(&self) -> bool {
        self.check != CheckMode::Skip && self.provenance != Provenance::Unverified
    }
}

/// Parses fixture text. Errors report the 1-based line as the position.
pub fn parse_fixtures(text: &str) -> Result<Vec<FixtureRow>> {
    let mut version = None;
    let mut rows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let bad = |message: String| Error::Parse {
            position: line,
            message,
        };
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(v) = content.strip_prefix("format-version") {
            let v: u32 = v
                .trim()
                .parse()
                .map_err(|_| bad(format!("bad format version '{}'", v.trim())))?;
            if v != FIXTURE_FORMAT_VERSION {
                return Err(bad(format!(
                    "format version {v} is not supported (expected {FIXTURE_FORMAT_VERSION})"
                )));
            }
            version = Some(v);
            continue;
        }
        if version.is_none() {
            return Err(bad("rows before the format-version line".into()));
        }
        let fields: Vec<&str> = content.split('|').map(str::trim).collect();
        if fields.len() != 10 {
            return Err(bad(format!("expected 10 fields, found {}", fields.len())));
        }
        let mut counts = [0u64; 6];
        for (c, f) in counts.iter_mut().zip(&fields[2..8]) {
            *c = f.parse().map_err(|_| bad(format!("bad count '{f}'")))?;
        }
        let provenance = fields[8].parse().map_err(bad)?;
        let check = fields[9].parse().map_err(bad)?;
        let spec = (fields[1] != "-").then(|| fields[1].to_string());
        if spec.is_none() && check != CheckMode::Skip {
            return Err(bad("rows without a group must use check mode 'skip'".into()));
        }
        rows.push(FixtureRow {
            id: fields[0].to_string(),
            spec,
            expected: TableRow::from_array(counts),
            provenance,
            check,
            line,
        });
    }
    if version.is_none() {
        return Err(Error::Parse {
            position: 0,
            message: "missing format-version line".into(),
        });
    }
    Ok(rows)
}

/// The rows of [`EXPECTED_TABLES`].
pub fn shipped_fixtures() -> Vec<FixtureRow> {
    parse_fixtures(EXPECTED_TABLES).expect("shipped fixture file parses")
}
