//! Parser for SCImago journal-rank exports.
//!
//! Real exports are `;`-delimited with decimal commas; re-exports through
//! spreadsheet tools often come back `,`-delimited with decimal points.
//! Both are accepted: the delimiter is auto-detected from the header line
//! (override via [`ParseOptions::delimiter`]) and SJR values parse with
//! either decimal separator.

use std::collections::{BTreeSet, HashSet};
use std::io::Read;

use crate::asjc;
use crate::Sjr;

use super::{
    column_index, report_issue, IngestError, Issn, ParseMode, ParseOptions, Parsed, SourceRecord,
    SourceType,
};

/// Parses a SCImago export into source records.
///
/// Required columns (case-insensitive): `Sourceid`, `Title`, `Type`,
/// `Issn`, `SJR`, `Categories`. Extra columns are ignored. The
/// `Categories` field is a `;`-separated list of `Name (Qn)` entries; the
/// quartile parentheticals are discarded (quartiles are recomputed
/// downstream) and names resolve to ASJC codes via the bundled table.
/// Unresolved names are reported as issues, never fatal.
pub fn parse_scimago_csv<R: Read>(
    reader: R,
    options: &ParseOptions,
) -> Result<Parsed<SourceRecord>, IngestError> {
    let mut bytes = Vec::new();
    let mut reader = reader;
    reader.read_to_end(&mut bytes)?;

    let delimiter = options.delimiter.unwrap_or_else(|| sniff_delimiter(&bytes));
    let mut csv_reader = csv::ReaderBuilder::new()
        .delimiter(delimiter)
        .flexible(true)
        .from_reader(bytes.as_slice());

    let headers = csv_reader.headers()?.clone();
    let col_id = column_index(&headers, "Sourceid")?;
    let col_title = column_index(&headers, "Title")?;
    let col_type = column_index(&headers, "Type")?;
    let col_issn = column_index(&headers, "Issn")?;
    let col_sjr = column_index(&headers, "SJR")?;
    let col_categories = column_index(&headers, "Categories")?;

    let mut records = Vec::new();
    let mut issues = Vec::new();
    let mut seen_ids = HashSet::new();

    for (idx, row) in csv_reader.records().enumerate() {
        let row_no = idx + 1;
        let row = row?;
        let field = |col: usize| row.get(col).unwrap_or("").trim();

        let source_id = field(col_id).to_string();
        if source_id.is_empty() {
            report_issue(options.mode, &mut issues, row_no, "empty Sourceid".into())?;
            continue;
        }
        if !seen_ids.insert(source_id.clone()) {
            report_issue(
                options.mode,
                &mut issues,
                row_no,
                format!("duplicate Sourceid {source_id:?}"),
            )?;
            continue;
        }

        let source_type = match field(col_type).parse::<SourceType>() {
            Ok(t) => t,
            Err(value) => {
                if options.mode == ParseMode::Strict {
                    return Err(IngestError::UnknownEnumValue { row: row_no, field: "Type", value });
                }
                report_issue(options.mode, &mut issues, row_no, format!("unknown Type {value:?}"))?;
                continue;
            }
        };

        let sjr = match parse_sjr(field(col_sjr)) {
            Ok(v) => v,
            Err(raw) => {
                report_issue(
                    options.mode,
                    &mut issues,
                    row_no,
                    format!("unparseable SJR {raw:?}"),
                )?;
                continue;
            }
        };

        let mut issns = BTreeSet::new();
        for raw in field(col_issn).split(',').map(str::trim).filter(|s| !s.is_empty()) {
            match Issn::parse(raw) {
                Ok(issn) => {
                    issns.insert(issn);
                }
                Err(err) => report_issue(options.mode, &mut issues, row_no, err.to_string())?,
            }
        }

        let mut categories = BTreeSet::new();
        for name in split_categories(field(col_categories)) {
            match asjc::code_for_name(&name) {
                Some(code) => {
                    categories.insert(code);
                }
                // Vocabulary gap, not row corruption: report in both modes.
                None => issues.push(super::RowIssue {
                    row: row_no,
                    message: format!("unmatched category name {name:?}"),
                }),
            }
        }

        records.push(SourceRecord {
            source_id,
            title: field(col_title).to_string(),
            issns,
            source_type,
            status: None,
            sjr,
            categories,
        });
    }

    Ok(Parsed { records, issues })
}

/// Delimiter sniffing: a header containing `;` is the native SCImago
/// format, otherwise assume comma.
fn sniff_delimiter(bytes: &[u8]) -> u8 {
    let header = bytes.split(|&b| b == b'\n').next().unwrap_or(&[]);
    if header.contains(&b';') {
        b';'
    } else {
        b','
    }
}

/// Parses an SJR cell, accepting both `0.195` and `0,195`. Empty means
/// no score. Negative values are rejected.
fn parse_sjr(raw: &str) -> Result<Option<Sjr>, String> {
    if raw.is_empty() {
        return Ok(None);
    }
    let normalized = raw.replace(',', ".");
    match normalized.parse::<Sjr>() {
        Ok(v) if v >= 0.0 && v.is_finite() => Ok(Some(v)),
        _ => Err(raw.to_string()),
    }
}

/// Splits a `Name (Q1); Other Name (Q3)` list into bare names, dropping
/// a trailing quartile parenthetical when present.
fn split_categories(raw: &str) -> Vec<String> {
    raw.split(';')
        .map(strip_quartile_parenthetical)
        .filter(|name| !name.is_empty())
        .collect()
}

fn strip_quartile_parenthetical(entry: &str) -> String {
    let entry = entry.trim();
    if let Some(open) = entry.rfind('(') {
        let inner = entry[open + 1..].trim_end_matches(')').trim();
        let is_quartile = matches!(inner, "Q1" | "Q2" | "Q3" | "Q4")
            || inner.eq_ignore_ascii_case("wos")
            || inner == "-";
        if is_quartile && entry.ends_with(')') {
            return entry[..open].trim().to_string();
        }
    }
    entry.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asjc::AsjcCode;

    fn opts_strict() -> ParseOptions {
        ParseOptions::strict()
    }

    #[test]
    fn decimal_comma_equals_decimal_point() {
        let semi = "Sourceid;Title;Type;Issn;SJR;Categories\n1;Foo;journal;0378-5955;0,195;Artificial Intelligence (Q2)\n";
        let comma = "Sourceid,Title,Type,Issn,SJR,Categories\n1,Foo,journal,0378-5955,0.195,Artificial Intelligence (Q2)\n";
        let a = parse_scimago_csv(semi.as_bytes(), &opts_strict()).unwrap();
        let b = parse_scimago_csv(comma.as_bytes(), &opts_strict()).unwrap();
        assert_eq!(a.records[0].sjr, Some(0.195));
        assert_eq!(a.records[0].sjr, b.records[0].sjr);
        assert_eq!(a.records[0].categories, b.records[0].categories);
    }

    #[test]
    fn empty_sjr_is_retained_as_absent() {
        let data = "Sourceid;Title;Type;Issn;SJR;Categories\n1;Foo;journal;;;\n";
        let parsed = parse_scimago_csv(data.as_bytes(), &opts_strict()).unwrap();
        assert_eq!(parsed.records.len(), 1);
        assert_eq!(parsed.records[0].sjr, None);
    }

    #[test]
    fn missing_title_column() {
        let data = "Sourceid;Type;Issn;SJR;Categories\n1;journal;;;\n";
        match parse_scimago_csv(data.as_bytes(), &opts_strict()) {
            Err(IngestError::MissingColumn { column }) => assert_eq!(column, "Title"),
            other => panic!("expected MissingColumn, got {other:?}"),
        }
    }

    #[test]
    fn categories_resolve_and_quartile_tags_drop() {
        let data = "Sourceid;Title;Type;Issn;SJR;Categories\n\
            1;Foo;conference and proceedings;15230864, 0378-5955;1,2;Artificial Intelligence (Q1); Applied Mathematics (Q3)\n";
        let parsed = parse_scimago_csv(data.as_bytes(), &opts_strict()).unwrap();
        let rec = &parsed.records[0];
        assert_eq!(rec.source_type, SourceType::ConferenceProceedings);
        assert_eq!(rec.issns.len(), 2);
        let codes: Vec<u16> = rec.categories.iter().map(|c| c.value()).collect();
        assert_eq!(codes, vec![1702, 2604]);
    }

    #[test]
    fn unmatched_category_name_is_reported_not_fatal() {
        let data = "Sourceid;Title;Type;Issn;SJR;Categories\n1;Foo;journal;;0,5;Astrology (Q1)\n";
        let parsed = parse_scimago_csv(data.as_bytes(), &opts_strict()).unwrap();
        assert_eq!(parsed.records.len(), 1);
        assert!(parsed.records[0].categories.is_empty());
        assert_eq!(parsed.issues.len(), 1);
        assert!(parsed.issues[0].message.contains("Astrology"));
    }

    #[test]
    fn strict_rejects_bad_sjr_lenient_skips() {
        let data = "Sourceid;Title;Type;Issn;SJR;Categories\n1;Foo;journal;;bogus;\n2;Bar;journal;;0,3;\n";
        assert!(matches!(
            parse_scimago_csv(data.as_bytes(), &opts_strict()),
            Err(IngestError::RowParse { row: 1, .. })
        ));
        let parsed = parse_scimago_csv(data.as_bytes(), &ParseOptions::lenient()).unwrap();
        assert_eq!(parsed.records.len(), 1);
        assert_eq!(parsed.records[0].source_id, "2");
        assert_eq!(parsed.issues.len(), 1);
    }

    #[test]
    fn duplicate_sourceid_rejected_in_strict() {
        let data = "Sourceid;Title;Type;Issn;SJR;Categories\n1;Foo;journal;;;\n1;Bar;journal;;;\n";
        assert!(matches!(
            parse_scimago_csv(data.as_bytes(), &opts_strict()),
            Err(IngestError::RowParse { row: 2, .. })
        ));
    }

    #[test]
    fn negative_sjr_rejected() {
        let data = "Sourceid;Title;Type;Issn;SJR;Categories\n1;Foo;journal;;-0,5;\n";
        assert!(parse_scimago_csv(data.as_bytes(), &opts_strict()).is_err());
    }

    #[test]
    fn deterministic_output() {
        let data = "Sourceid;Title;Type;Issn;SJR;Categories\n2;B;journal;;0,2;\n1;A;journal;;0,1;\n";
        let a = parse_scimago_csv(data.as_bytes(), &opts_strict()).unwrap();
        let b = parse_scimago_csv(data.as_bytes(), &opts_strict()).unwrap();
        assert_eq!(a.records, b.records);
        // input order is preserved, not sorted
        assert_eq!(a.records[0].source_id, "2");
    }

    #[test]
    fn general_category_variant_resolves() {
        let data = "Sourceid;Title;Type;Issn;SJR;Categories\n1;Foo;journal;;0,5;Computer Science (all) (Q2)\n";
        let parsed = parse_scimago_csv(data.as_bytes(), &opts_strict()).unwrap();
        assert_eq!(
            parsed.records[0].categories.iter().next(),
            Some(&AsjcCode::new(1700).unwrap())
        );
    }
}
