//! Parsing and normalization of the four input file families.
//!
//! * SCImago export (`;`- or `,`-delimited, decimal comma tolerated)
//! * canonical source list CSV
//! * expert ranking CSV (CORE-style)
//! * publication counts CSV
//!
//! All parsers are pure functions of their input bytes: identical input
//! produces identical records in identical order. Row-level problems are
//! fatal in [`ParseMode::Strict`] and collected as [`RowIssue`]s in
//! [`ParseMode::Lenient`].

mod expert;
mod issn;
mod merge;
mod pubcounts;
mod scimago;
mod source_list;

pub use expert::parse_expert_csv;
pub use issn::{normalize_issn, Issn, IssnError};
pub use merge::{merge_sources, MergeOutcome};
pub use pubcounts::parse_pub_counts;
pub use scimago::parse_scimago_csv;
pub use source_list::{parse_source_list, write_source_list};

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::asjc::AsjcCode;
use crate::Sjr;

/// Kind of serial publication source.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SourceType {
    Journal,
    BookSeries,
    ConferenceProceedings,
    TradeJournal,
}

impl SourceType {
    /// Canonical source-list spelling.
    pub fn as_str(self) -> &'static str {
        match self {
            SourceType::Journal => "journal",
            SourceType::BookSeries => "book series",
            SourceType::ConferenceProceedings => "conference proceedings",
            SourceType::TradeJournal => "trade journal",
        }
    }
}

impl fmt::Display for SourceType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SourceType {
    type Err = String;

    /// Accepts canonical spellings plus the SCImago export variants
    /// ("conference and proceedings", "book serie").
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_lowercase().as_str() {
            "journal" => Ok(SourceType::Journal),
            "book series" | "book serie" => Ok(SourceType::BookSeries),
            "conference proceedings" | "conference proceeding" | "conference and proceedings" => {
                Ok(SourceType::ConferenceProceedings)
            }
            "trade journal" => Ok(SourceType::TradeJournal),
            other => Err(other.to_string()),
        }
    }
}

/// Indexing status of a source.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Status {
    Ongoing,
    Discontinued,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ongoing => "ongoing",
            Status::Discontinued => "discontinued",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Status {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_lowercase().as_str() {
            "ongoing" => Ok(Status::Ongoing),
            "discontinued" => Ok(Status::Discontinued),
            other => Err(other.to_string()),
        }
    }
}

/// One serial publication source as parsed from an input file.
///
/// `status` is `None` when the file family does not carry the field
/// (SCImago exports do not); the merge step fills it in from the source
/// list where a join partner exists.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SourceRecord {
    pub source_id: String,
    pub title: String,
    pub issns: BTreeSet<Issn>,
    pub source_type: SourceType,
    pub status: Option<Status>,
    pub sjr: Option<Sjr>,
    pub categories: BTreeSet<AsjcCode>,
}

/// One entry of an expert conference ranking.
///
/// `rank_label` is kept verbatim; mapping to an ordinal scale happens in
/// the compare stage.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpertEntry {
    pub entry_id: String,
    pub title: String,
    pub acronym: Option<String>,
    pub rank_label: String,
}

/// Publication count of one source in one category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PubCount {
    pub source_id: String,
    pub category: AsjcCode,
    pub count: u64,
}

/// Row-error policy for the parsers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ParseMode {
    /// Any row-level problem aborts the parse (zero errors tolerated).
    #[default]
    Strict,
    /// Problem rows are skipped and reported; the parse continues.
    Lenient,
}

/// Parser configuration.
#[derive(Debug, Clone, Default)]
pub struct ParseOptions {
    pub mode: ParseMode,
    /// Field delimiter override; auto-detected from the header when `None`.
    pub delimiter: Option<u8>,
}

impl ParseOptions {
    pub fn strict() -> Self {
        Self { mode: ParseMode::Strict, delimiter: None }
    }

    pub fn lenient() -> Self {
        Self { mode: ParseMode::Lenient, delimiter: None }
    }
}

/// A non-fatal problem tied to an input row (1-based, header excluded).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowIssue {
    pub row: usize,
    pub message: String,
}

impl fmt::Display for RowIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "row {}: {}", self.row, self.message)
    }
}

/// Records plus the issues collected while parsing them.
#[derive(Debug, Clone)]
pub struct Parsed<T> {
    pub records: Vec<T>,
    pub issues: Vec<RowIssue>,
}

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("missing required column {column:?}")]
    MissingColumn { column: String },
    #[error("input contains no data rows")]
    EmptyFile,
    #[error("row {row}: {message}")]
    RowParse { row: usize, message: String },
    #[error("row {row}: unknown {field} value {value:?}")]
    UnknownEnumValue { row: usize, field: &'static str, value: String },
    #[error("duplicate join key: {key} claimed by {first:?} and {second:?}")]
    DuplicateJoinKey { key: String, first: String, second: String },
    #[error("malformed input: {0}")]
    Csv(#[from] csv::Error),
    #[error("I/O failure: {0}")]
    Io(#[from] std::io::Error),
}

/// Locates required header columns case-insensitively.
pub(crate) fn column_index(
    headers: &csv::StringRecord,
    name: &str,
) -> Result<usize, IngestError> {
    headers
        .iter()
        .position(|h| h.trim().eq_ignore_ascii_case(name))
        .ok_or_else(|| IngestError::MissingColumn { column: name.to_string() })
}

/// Applies the row-error policy: strict mode promotes the issue to an error,
/// lenient mode stores it.
pub(crate) fn report_issue(
    mode: ParseMode,
    issues: &mut Vec<RowIssue>,
    row: usize,
    message: String,
) -> Result<(), IngestError> {
    match mode {
        ParseMode::Strict => Err(IngestError::RowParse { row, message }),
        ParseMode::Lenient => {
            issues.push(RowIssue { row, message });
            Ok(())
        }
    }
}
