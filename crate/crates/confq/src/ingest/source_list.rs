//! Canonical source list CSV: `source_id,title,issn,e_issn,type,status,asjc_codes`.
//!
//! UTF-8, LF line endings, `;`-separated 4-digit codes in `asjc_codes`.
//! [`write_source_list`] emits the same format, so parse -> emit -> parse
//! round-trips to structurally identical records and emit -> parse -> emit
//! is byte-identical.

use std::collections::{BTreeSet, HashSet};
use std::io::{Read, Write};

use crate::asjc::AsjcCode;

use super::{
    column_index, report_issue, IngestError, Issn, ParseMode, ParseOptions, Parsed, SourceRecord,
    SourceType, Status,
};

pub fn parse_source_list<R: Read>(
    reader: R,
    options: &ParseOptions,
) -> Result<Parsed<SourceRecord>, IngestError> {
    let mut csv_reader = csv::ReaderBuilder::new()
        .delimiter(options.delimiter.unwrap_or(b','))
        .from_reader(reader);

    let headers = csv_reader.headers()?.clone();
    let col_id = column_index(&headers, "source_id")?;
    let col_title = column_index(&headers, "title")?;
    let col_issn = column_index(&headers, "issn")?;
    let col_e_issn = column_index(&headers, "e_issn")?;
    let col_type = column_index(&headers, "type")?;
    let col_status = column_index(&headers, "status")?;
    let col_codes = column_index(&headers, "asjc_codes")?;

    let mut records = Vec::new();
    let mut issues = Vec::new();
    let mut seen_ids = HashSet::new();

    for (idx, row) in csv_reader.records().enumerate() {
        let row_no = idx + 1;
        let row = row?;
        let field = |col: usize| row.get(col).unwrap_or("").trim();

        let source_id = field(col_id).to_string();
        if source_id.is_empty() {
            report_issue(options.mode, &mut issues, row_no, "empty source_id".into())?;
            continue;
        }
        if !seen_ids.insert(source_id.clone()) {
            report_issue(
                options.mode,
                &mut issues,
                row_no,
                format!("duplicate source_id {source_id:?}"),
            )?;
            continue;
        }

        let source_type = match field(col_type).parse::<SourceType>() {
            Ok(t) => t,
            Err(value) => {
                if options.mode == ParseMode::Strict {
                    return Err(IngestError::UnknownEnumValue { row: row_no, field: "type", value });
                }
                report_issue(options.mode, &mut issues, row_no, format!("unknown type {value:?}"))?;
                continue;
            }
        };

        let status = match field(col_status).parse::<Status>() {
            Ok(s) => s,
            Err(value) => {
                if options.mode == ParseMode::Strict {
                    return Err(IngestError::UnknownEnumValue {
                        row: row_no,
                        field: "status",
                        value,
                    });
                }
                report_issue(
                    options.mode,
                    &mut issues,
                    row_no,
                    format!("unknown status {value:?}"),
                )?;
                continue;
            }
        };

        let mut issns = BTreeSet::new();
        for raw in [field(col_issn), field(col_e_issn)] {
            if raw.is_empty() {
                continue;
            }
            match Issn::parse(raw) {
                Ok(issn) => {
                    issns.insert(issn);
                }
                Err(err) => report_issue(options.mode, &mut issues, row_no, err.to_string())?,
            }
        }

        let mut categories = BTreeSet::new();
        let mut bad_code = false;
        for raw in field(col_codes).split(';').map(str::trim).filter(|s| !s.is_empty()) {
            match raw.parse::<AsjcCode>() {
                Ok(code) => {
                    categories.insert(code);
                }
                Err(err) => {
                    report_issue(options.mode, &mut issues, row_no, err.to_string())?;
                    bad_code = true;
                }
            }
        }
        if bad_code {
            continue;
        }

        records.push(SourceRecord {
            source_id,
            title: field(col_title).to_string(),
            issns,
            source_type,
            status: Some(status),
            sjr: None,
            categories,
        });
    }

    Ok(Parsed { records, issues })
}

/// Emits records in the canonical format. `issn` takes the first ISSN in
/// sorted order, `e_issn` the second; records never carry more than two
/// when they came from this format.
pub fn write_source_list<W: Write>(writer: W, records: &[SourceRecord]) -> Result<(), IngestError> {
    let mut csv_writer = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(writer);
    csv_writer.write_record(["source_id", "title", "issn", "e_issn", "type", "status", "asjc_codes"])?;
    for record in records {
        let mut issns = record.issns.iter();
        let issn = issns.next().map(Issn::to_string).unwrap_or_default();
        let e_issn = issns.next().map(Issn::to_string).unwrap_or_default();
        let codes = record
            .categories
            .iter()
            .map(AsjcCode::to_string)
            .collect::<Vec<_>>()
            .join(";");
        csv_writer.write_record([
            record.source_id.as_str(),
            record.title.as_str(),
            issn.as_str(),
            e_issn.as_str(),
            record.source_type.as_str(),
            record.status.map(Status::as_str).unwrap_or(""),
            codes.as_str(),
        ])?;
    }
    csv_writer.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "source_id,title,issn,e_issn,type,status,asjc_codes\n\
        s1,Foo Conf,0378-5955,,conference proceedings,ongoing,1702;2604\n\
        s2,Bar Journal,,1523-0864,journal,discontinued,1700\n";

    #[test]
    fn decodes_enums_and_codes() {
        let parsed = parse_source_list(SAMPLE.as_bytes(), &ParseOptions::strict()).unwrap();
        assert_eq!(parsed.records.len(), 2);
        let conf = &parsed.records[0];
        assert_eq!(conf.source_type, SourceType::ConferenceProceedings);
        assert_eq!(conf.status, Some(Status::Ongoing));
        let codes: Vec<u16> = conf.categories.iter().map(|c| c.value()).collect();
        assert_eq!(codes, vec![1702, 2604]);
    }

    #[test]
    fn unknown_status_is_enum_error() {
        let data = "source_id,title,issn,e_issn,type,status,asjc_codes\ns1,Foo,,,journal,paused,\n";
        match parse_source_list(data.as_bytes(), &ParseOptions::strict()) {
            Err(IngestError::UnknownEnumValue { row, field, value }) => {
                assert_eq!(row, 1);
                assert_eq!(field, "status");
                assert_eq!(value, "paused");
            }
            other => panic!("expected UnknownEnumValue, got {other:?}"),
        }
    }

    #[test]
    fn missing_column_is_fatal() {
        let data = "source_id,title,issn,e_issn,type,asjc_codes\ns1,Foo,,,journal,\n";
        assert!(matches!(
            parse_source_list(data.as_bytes(), &ParseOptions::strict()),
            Err(IngestError::MissingColumn { column }) if column == "status"
        ));
    }

    #[test]
    fn round_trip_is_structurally_identical() {
        let parsed = parse_source_list(SAMPLE.as_bytes(), &ParseOptions::strict()).unwrap();
        let mut emitted = Vec::new();
        write_source_list(&mut emitted, &parsed.records).unwrap();
        let reparsed = parse_source_list(emitted.as_slice(), &ParseOptions::strict()).unwrap();
        assert_eq!(parsed.records, reparsed.records);
    }

    #[test]
    fn second_emit_is_byte_identical() {
        let parsed = parse_source_list(SAMPLE.as_bytes(), &ParseOptions::strict()).unwrap();
        let mut first = Vec::new();
        write_source_list(&mut first, &parsed.records).unwrap();
        let reparsed = parse_source_list(first.as_slice(), &ParseOptions::strict()).unwrap();
        let mut second = Vec::new();
        write_source_list(&mut second, &reparsed.records).unwrap();
        assert_eq!(first, second);
    }

    #[test]
    fn titles_with_commas_round_trip() {
        let records = vec![SourceRecord {
            source_id: "s1".into(),
            title: "Signals, Systems, and Computers".into(),
            issns: BTreeSet::new(),
            source_type: SourceType::ConferenceProceedings,
            status: Some(Status::Ongoing),
            sjr: None,
            categories: BTreeSet::new(),
        }];
        let mut emitted = Vec::new();
        write_source_list(&mut emitted, &records).unwrap();
        let reparsed = parse_source_list(emitted.as_slice(), &ParseOptions::strict()).unwrap();
        assert_eq!(records, reparsed.records);
    }
}
