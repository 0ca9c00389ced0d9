use std::io::BufRead;

use crate::error::{Error, Result};
use crate::model::RawQuoteRecord;

/// A line that did not have four or five tab-separated fields.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MalformedRow {
    pub line: usize,
    pub field_count: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TsvParse {
    pub records: Vec<RawQuoteRecord>,
    pub malformed: Vec<MalformedRow>,
}

/// Parses a raw quote TSV held in memory.
///
/// Column order is id, speaker, job title, affiliation, quote. Four-column
/// rows have no job title column.
pub fn parse_tsv_str(text: &str) -> TsvParse {
    let mut out = TsvParse::default();
    for (idx, line) in text.split('\n').enumerate() {
        parse_line(idx + 1, line, &mut out);
    }
    out
}

pub fn parse_tsv<R: BufRead>(reader: R, source: &str) -> Result<TsvParse> {
    let mut out = TsvParse::default();
    for (idx, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Error::io(source, e))?;
        parse_line(idx + 1, &line, &mut out);
    }
    Ok(out)
}

fn parse_line(number: usize, line: &str, out: &mut TsvParse) {
    let line = line.strip_suffix('\r').unwrap_or(line);
    if line.trim().is_empty() {
        return;
    }
    let fields: Vec<&str> = line.split('\t').collect();
    let record = match fields.as_slice() {
        [id, speaker, affiliation, quote] => RawQuoteRecord {
            id: id.to_string(),
            speaker: speaker.to_string(),
            job_title: String::new(),
            affiliation: affiliation.to_string(),
            quote: quote.to_string(),
        },
        [id, speaker, job_title, affiliation, quote] => RawQuoteRecord {
            id: id.to_string(),
            speaker: speaker.to_string(),
            job_title: job_title.to_string(),
            affiliation: affiliation.to_string(),
            quote: quote.to_string(),
        },
        _ => {
            log::warn!("line {number}: expected 4 or 5 fields, found {}", fields.len());
            out.malformed.push(MalformedRow {
                line: number,
                field_count: fields.len(),
            });
            return;
        }
    };
    out.records.push(record);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_fields() {
        let parsed = parse_tsv_str(
            "Q1\tDick Fuld\tCEO\tLehman Brothers\tYou know what, let them line up; I can handle it.",
        );
        assert!(parsed.malformed.is_empty());
        assert_eq!(
            parsed.records,
            vec![RawQuoteRecord {
                id: "Q1".into(),
                speaker: "Dick Fuld".into(),
                job_title: "CEO".into(),
                affiliation: "Lehman Brothers".into(),
                quote: "You know what, let them line up; I can handle it.".into(),
            }]
        );
    }

    #[test]
    fn four_fields_leave_job_title_empty() {
        let parsed = parse_tsv_str("Q9\tBen Bernanke\tUS Federal Reserve\tIt seems worthwhile.\r\n");
        let r = &parsed.records[0];
        assert_eq!(r.job_title, "");
        assert_eq!(r.affiliation, "US Federal Reserve");
        assert_eq!(r.quote, "It seems worthwhile.");
    }

    #[test]
    fn blank_lines_skipped_and_bad_arity_reported() {
        let parsed = parse_tsv_str("\n\nQ2\tonly\ttwo\nQ3\ta\tb\tc\td\te\tf\n\n");
        assert!(parsed.records.is_empty());
        assert_eq!(
            parsed.malformed,
            vec![
                MalformedRow { line: 3, field_count: 3 },
                MalformedRow { line: 4, field_count: 7 },
            ]
        );
    }

    #[test]
    fn reader_and_str_agree() {
        let text = "A\tx\t\ty\tq one\nB\tz\tCEO\tw\tq two\n";
        let from_reader = parse_tsv(std::io::Cursor::new(text), "mem").unwrap();
        assert_eq!(from_reader, parse_tsv_str(text));
        assert_eq!(from_reader.records.len(), 2);
    }
}
