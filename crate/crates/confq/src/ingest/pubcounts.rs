//! Publication counts CSV: `source_id,asjc_code,publication_count`.

use std::io::Read;

use crate::asjc::AsjcCode;

use super::{column_index, report_issue, IngestError, ParseOptions, Parsed, PubCount};

pub fn parse_pub_counts<R: Read>(
    reader: R,
    options: &ParseOptions,
) -> Result<Parsed<PubCount>, IngestError> {
    let mut csv_reader = csv::ReaderBuilder::new()
        .delimiter(options.delimiter.unwrap_or(b','))
        .from_reader(reader);

    let headers = csv_reader.headers()?.clone();
    let col_id = column_index(&headers, "source_id")?;
    let col_code = column_index(&headers, "asjc_code")?;
    let col_count = column_index(&headers, "publication_count")?;

    let mut records = Vec::new();
    let mut issues = Vec::new();

    for (idx, row) in csv_reader.records().enumerate() {
        let row_no = idx + 1;
        let row = row?;
        let field = |col: usize| row.get(col).unwrap_or("").trim();

        let source_id = field(col_id).to_string();
        if source_id.is_empty() {
            report_issue(options.mode, &mut issues, row_no, "empty source_id".into())?;
            continue;
        }
        let category = match field(col_code).parse::<AsjcCode>() {
            Ok(code) => code,
            Err(err) => {
                report_issue(options.mode, &mut issues, row_no, err.to_string())?;
                continue;
            }
        };
        let count = match field(col_count).parse::<u64>() {
            Ok(v) => v,
            Err(_) => {
                report_issue(
                    options.mode,
                    &mut issues,
                    row_no,
                    format!("unparseable publication_count {:?}", field(col_count)),
                )?;
                continue;
            }
        };

        records.push(PubCount { source_id, category, count });
    }

    Ok(Parsed { records, issues })
}
