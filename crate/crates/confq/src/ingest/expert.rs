//! Expert ranking CSV: `entry_id,title,acronym,rank`, header optional.
//!
//! Header detection follows the documented heuristic: if the first field
//! of the first row is non-numeric, the row is treated as a header.
//! Headerless files therefore need numeric entry ids (CORE exports have
//! them); anything else should ship a header row.

use std::io::Read;

use super::{column_index, report_issue, IngestError, ExpertEntry, ParseOptions, Parsed};

pub fn parse_expert_csv<R: Read>(
    reader: R,
    options: &ParseOptions,
) -> Result<Parsed<ExpertEntry>, IngestError> {
    let mut csv_reader = csv::ReaderBuilder::new()
        .delimiter(options.delimiter.unwrap_or(b','))
        .has_headers(false)
        .flexible(true)
        .from_reader(reader);

    let mut rows: Vec<csv::StringRecord> = Vec::new();
    for row in csv_reader.records() {
        rows.push(row?);
    }
    if rows.is_empty() {
        return Err(IngestError::EmptyFile);
    }

    let first_field = rows[0].get(0).unwrap_or("").trim();
    let has_header = first_field.parse::<f64>().is_err();

    let (col_id, col_title, col_acronym, col_rank, data_start) = if has_header {
        let headers = &rows[0];
        let col_title = column_index(headers, "title")?;
        let col_acronym = column_index(headers, "acronym")?;
        let col_rank = column_index(headers, "rank")?;
        let col_id = column_index(headers, "entry_id").ok();
        (col_id, col_title, col_acronym, col_rank, 1)
    } else {
        // Positional layout: entry_id,title,acronym,rank.
        (Some(0), 1, 2, 3, 0)
    };

    let mut entries = Vec::new();
    let mut issues = Vec::new();

    for (idx, row) in rows.iter().enumerate().skip(data_start) {
        let row_no = idx + 1 - data_start;
        let field = |col: usize| row.get(col).unwrap_or("").trim();

        let entry_id = match col_id {
            Some(col) if !field(col).is_empty() => field(col).to_string(),
            _ => format!("row-{row_no}"),
        };
        let title = field(col_title).to_string();
        if title.is_empty() {
            report_issue(options.mode, &mut issues, row_no, "empty title".into())?;
            continue;
        }
        let acronym = match field(col_acronym) {
            "" => None,
            a => Some(a.to_string()),
        };

        entries.push(ExpertEntry {
            entry_id,
            title,
            acronym,
            // Preserved verbatim; ordinal mapping happens in compare.
            rank_label: field(col_rank).to_string(),
        });
    }

    if entries.is_empty() && issues.is_empty() {
        return Err(IngestError::EmptyFile);
    }
    Ok(Parsed { records: entries, issues })
}
