//! Quartile rating of conference proceedings from SJR data.
//!
//! Journal-centric evaluation schemes leave conference proceedings in the
//! lowest point class even when their SJR is on par with first-quartile
//! journals. This crate ingests a SCImago export and a Scopus-style source
//! list, computes per-subject-category quartile thresholds from the
//! journal/book-series population, assigns each conference proceedings
//! source to Q1-Q4 per category, aligns the result with an expert ranking
//! (CORE-style grades), and applies point schemes such as CMEPP.
//!
//! Pipeline stages map onto the top-level modules:
//!
//! * [`ingest`] — parse and merge the input file families.
//! * [`classify`] — thresholds, quartile assignment, category deduction.
//! * [`compare`] — expert-ranking linkage and alignment statistics.
//! * [`score`] — point schemes applied to classified sources.
//! * [`report`] — CSV/JSON/Markdown/SVG emitters.
//!
//! The numeric core (thresholds, quartile assignment, rank correlation,
//! scoring) is generic over the scalar type via [`num::Real`]; the pipeline
//! instantiates everything with [`Sjr`] (`f64`).

pub mod asjc;
pub mod classify;
pub mod compare;
pub mod ingest;
pub mod num;
pub mod report;
pub mod score;

/// Scalar type used by the concrete pipeline for SJR values, scores and
/// statistics.
pub type Sjr = f64;

/// Per-category quartile thresholds at pipeline precision.
pub type Thresholds = classify::CategoryThresholds<Sjr>;

/// A point scheme at pipeline precision.
pub type Scheme = score::ScoreScheme<Sjr>;

pub use asjc::AsjcCode;
pub use classify::{Quartile, QuartileAssignment};
pub use ingest::{Issn, SourceRecord, SourceType, Status};
