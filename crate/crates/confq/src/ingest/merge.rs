//! Join of the SCImago export with the canonical source list.
//!
//! SJR values come from the SCImago side, indexing status and the
//! authoritative type come from the source list. Join key is `source_id`
//! first, any shared ISSN as fallback.

use std::collections::{BTreeSet, HashMap};

use super::{IngestError, Issn, ParseMode, SourceRecord, SourceType, Status};

/// Result of [`merge_sources`].
#[derive(Debug, Clone)]
pub struct MergeOutcome {
    /// Ongoing conference proceedings with an SJR score, sorted by
    /// `source_id`. The population to classify.
    pub conferences: Vec<SourceRecord>,
    /// Journals and book series with an SJR score, sorted by `source_id`.
    /// The population the quartile thresholds are computed from.
    pub rank_population: Vec<SourceRecord>,
    /// Join diagnostics (duplicate keys under lenient mode, type
    /// disagreements between the two inputs).
    pub issues: Vec<String>,
}

pub fn merge_sources(
    scimago: &[SourceRecord],
    source_list: &[SourceRecord],
    mode: ParseMode,
) -> Result<MergeOutcome, IngestError> {
    let mut issues = Vec::new();

    let mut by_id: HashMap<&str, &SourceRecord> = HashMap::new();
    for record in source_list {
        by_id.insert(record.source_id.as_str(), record);
    }

    let mut by_issn: HashMap<Issn, &SourceRecord> = HashMap::new();
    for record in source_list {
        for &issn in &record.issns {
            if let Some(first) = by_issn.get(&issn) {
                let err = IngestError::DuplicateJoinKey {
                    key: issn.to_string(),
                    first: first.source_id.clone(),
                    second: record.source_id.clone(),
                };
                if mode == ParseMode::Strict {
                    return Err(err);
                }
                // First-parsed wins under lenient mode.
                issues.push(err.to_string());
            } else {
                by_issn.insert(issn, record);
            }
        }
    }

    let mut conferences = Vec::new();
    let mut rank_population = Vec::new();

    for record in scimago {
        let partner = by_id
            .get(record.source_id.as_str())
            .copied()
            .or_else(|| record.issns.iter().find_map(|issn| by_issn.get(issn).copied()));

        let merged = match partner {
            Some(list_record) => {
                if list_record.source_type != record.source_type {
                    issues.push(format!(
                        "source {}: type {:?} in source list vs {:?} in SCImago export; source list wins",
                        record.source_id, list_record.source_type, record.source_type
                    ));
                }
                let mut issns: BTreeSet<Issn> = record.issns.clone();
                issns.extend(list_record.issns.iter().copied());
                let mut categories = record.categories.clone();
                categories.extend(list_record.categories.iter().copied());
                SourceRecord {
                    source_id: record.source_id.clone(),
                    title: if list_record.title.is_empty() {
                        record.title.clone()
                    } else {
                        list_record.title.clone()
                    },
                    issns,
                    source_type: list_record.source_type,
                    status: list_record.status,
                    sjr: record.sjr,
                    categories,
                }
            }
            None => record.clone(),
        };

        if merged.sjr.is_none() {
            continue;
        }
        match merged.source_type {
            SourceType::ConferenceProceedings => {
                // The paper's scope: currently indexed proceedings only, so
                // an unknown status (no source-list partner) does not qualify.
                if merged.status == Some(Status::Ongoing) {
                    conferences.push(merged);
                }
            }
            SourceType::Journal | SourceType::BookSeries => rank_population.push(merged),
            SourceType::TradeJournal => {}
        }
    }

    conferences.sort_by(|a, b| a.source_id.cmp(&b.source_id));
    rank_population.sort_by(|a, b| a.source_id.cmp(&b.source_id));

    Ok(MergeOutcome { conferences, rank_population, issues })
}
