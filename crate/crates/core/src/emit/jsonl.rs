use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::model::EnrichedQuote;

/// On-disk key order.
pub const JSONL_KEYS: [&str; 11] = [
    "ID",
    "SpeakerName",
    "JobRole",
    "Affiliation",
    "Sentences",
    "Neologism",
    "Quotedphrases",
    "Simile",
    "Metaphor",
    "Emotion",
    "Entities",
];

pub fn to_jsonl_line(record: &EnrichedQuote) -> String {
    serde_json::to_string(record).expect("EnrichedQuote always serializes")
}

/// Writes one object per line, LF terminated. Returns the number written.
pub fn write_jsonl<W: Write>(records: &[EnrichedQuote], sink: W, path: &Path) -> Result<usize> {
    let mut sink = BufWriter::new(sink);
    for record in records {
        let line = to_jsonl_line(record);
        sink.write_all(line.as_bytes())
            .and_then(|_| sink.write_all(b"\n"))
            .map_err(|e| Error::io(path, e))?;
    }
    sink.flush().map_err(|e| Error::io(path, e))?;
    Ok(records.len())
}

pub fn write_jsonl_file(path: &Path, records: &[EnrichedQuote]) -> Result<usize> {
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    write_jsonl(records, file, path)
}

#[derive(Debug, Default)]
pub struct JsonlRead {
    pub records: Vec<EnrichedQuote>,
    /// one `Error::Schema` per skipped line
    pub errors: Vec<Error>,
    pub warnings: Vec<String>,
}

fn parse_line(line_no: usize, line: &str, warnings: &mut Vec<String>) -> Result<EnrichedQuote> {
    let schema = |message: String| Error::Schema {
        line: line_no,
        message,
    };
    let value: Value = serde_json::from_str(line).map_err(|e| schema(e.to_string()))?;
    let Value::Object(map) = &value else {
        return Err(schema("not a JSON object".into()));
    };
    if let Some(missing) = JSONL_KEYS.iter().find(|k| !map.contains_key(**k)) {
        return Err(schema(format!("missing key {missing:?}")));
    }
    for key in map.keys().filter(|k| !JSONL_KEYS.contains(&k.as_str())) {
        log::warn!("line {line_no}: ignoring unknown key {key:?}");
        warnings.push(format!("line {line_no}: unknown key {key:?}"));
    }
    serde_json::from_value(value).map_err(|e| schema(e.to_string()))
}

/// Reads a corpus, skipping (and recording) lines that do not fit the schema.
/// Blank lines are ignored.
pub fn read_jsonl<R: BufRead>(source: R, path: &Path) -> Result<JsonlRead> {
    let mut out = JsonlRead::default();
    for (idx, line) in source.lines().enumerate() {
        let line = line.map_err(|e| Error::io(path, e))?;
        if line.trim().is_empty() {
            continue;
        }
        match parse_line(idx + 1, &line, &mut out.warnings) {
            Ok(record) => out.records.push(record),
            Err(e) => {
                log::warn!("{}: {e}", path.display());
                out.errors.push(e);
            }
        }
    }
    Ok(out)
}

pub fn read_jsonl_file(path: &Path) -> Result<JsonlRead> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    read_jsonl(BufReader::new(file), path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affect::{EmotionScores, EntityClass, EntityMention};
    use crate::figurative::{MetaphorKind, MetaphorMatch, SimileMatch};

    fn sample(id: &str) -> EnrichedQuote {
        EnrichedQuote {
            id: id.into(),
            speaker: "Jane Doe".into(),
            job_title: "CEO".into(),
            affiliation: "Acme".into(),
            sentences: vec!["It is as good as a coin flip.".into()],
            neologisms: vec![],
            quoted_phrases: vec!["coin flip".into()],
            similes: vec![SimileMatch {
                text: "as good as a coin flip".into(),
                rule: 2,
                lhs: "good".into(),
                rhs: "a coin flip".into(),
            }],
            metaphors: vec![MetaphorMatch {
                text: "a leap of faith".into(),
                kind: MetaphorKind::Of,
                lhs_np: "a leap".into(),
                rhs_np: "faith".into(),
                pmi: Some(0.1 + 0.2),
            }],
            emotion: EmotionScores::from_scores([0.0, 1.0 / 3.0, 0.0, 0.0]),
            entities: vec![EntityMention {
                surface: "Acme".into(),
                class: EntityClass::Org,
                start: 0,
            }],
        }
    }

    fn write_string(records: &[EnrichedQuote]) -> String {
        let mut buf = Vec::new();
        write_jsonl(records, &mut buf, Path::new("mem")).unwrap();
        String::from_utf8(buf).unwrap()
    }

    fn read_str(text: &str) -> JsonlRead {
        read_jsonl(text.as_bytes(), Path::new("mem")).unwrap()
    }

    #[test]
    fn key_order() {
        let line = to_jsonl_line(&sample("Q1"));
        let mut last = 0;
        for key in JSONL_KEYS {
            let pos = line.find(&format!("\"{key}\":")).unwrap();
            assert!(pos >= last, "{key} out of order");
            last = pos;
        }
        assert!(line.contains("\"Simile\":[{\"text\":\"as good as a coin flip\""));
    }

    #[test]
    fn roundtrip() {
        let records = vec![sample("Q1"), sample("Q2"), sample("Q3")];
        let text = write_string(&records);
        assert_eq!(text.lines().count(), 3);
        assert!(text.ends_with('\n'));
        let back = read_str(&text);
        assert!(back.errors.is_empty());
        assert_eq!(back.records, records);
        assert_eq!(write_string(&back.records), text);
    }

    #[test]
    fn empty_writes_nothing() {
        assert_eq!(write_string(&[]), "");
    }

    #[test]
    fn bad_lines_are_skipped_and_reported() {
        let good = to_jsonl_line(&sample("Q1"));
        let text = format!("{good}\nnot json\n[1]\n{{\"ID\":\"x\"}}\n{good}\n");
        let r = read_str(&text);
        assert_eq!(r.records.len(), 2);
        let lines: Vec<usize> = r
            .errors
            .iter()
            .map(|e| match e {
                Error::Schema { line, .. } => *line,
                other => panic!("unexpected {other}"),
            })
            .collect();
        assert_eq!(lines, [2, 3, 4]);
    }

    #[test]
    fn extra_key_warns() {
        let line = to_jsonl_line(&sample("Q1"));
        let edited = line.replacen('{', "{\"Extra\":1,", 1);
        let r = read_str(&edited);
        assert_eq!(r.records, [sample("Q1")]);
        assert_eq!(r.warnings.len(), 1);
        assert!(r.warnings[0].contains("Extra"));
    }
}
