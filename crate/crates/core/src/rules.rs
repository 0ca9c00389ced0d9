//! Reader for the line-oriented, tab-separated resource files.

use crate::error::{Error, Result};

/// One non-comment, non-blank line split on tabs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct RuleLine<'a> {
    pub line: usize,
    pub fields: Vec<&'a str>,
}

/// Yields the data lines of a resource file. Lines whose first non-space
/// character is `#` are comments.
pub(crate) fn rule_lines(text: &str) -> impl Iterator<Item = RuleLine<'_>> {
    text.lines().enumerate().filter_map(|(idx, raw)| {
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            return None;
        }
        Some(RuleLine {
            line: idx + 1,
            fields: line.split('\t').map(str::trim).collect(),
        })
    })
}

/// Like [`rule_lines`] but requires exactly `arity` fields per line.
pub(crate) fn fixed_arity<'a>(
    source: &str,
    text: &'a str,
    arity: usize,
) -> Result<Vec<(usize, Vec<&'a str>)>> {
    rule_lines(text)
        .map(|l| {
            if l.fields.len() != arity || l.fields.iter().any(|f| f.is_empty()) {
                Err(Error::RuleFile {
                    path: source.to_string(),
                    line: l.line,
                    message: format!("expected {arity} non-empty tab-separated fields"),
                })
            } else {
                Ok((l.line, l.fields))
            }
        })
        .collect()
}

pub(crate) fn rule_error(source: &str, line: usize, message: impl Into<String>) -> Error {
    Error::RuleFile {
        path: source.to_string(),
        line,
        message: message.into(),
    }
}

/// Collapses every run of whitespace to one ASCII space and trims the ends.
pub fn collapse_whitespace(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for word in text.split_whitespace() {
        if !out.is_empty() {
            out.push(' ');
        }
        out.push_str(word);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comments_and_blanks_are_skipped() {
        let text = "# header\n\na\tb\r\n  # indented comment\nc\td\n";
        let lines: Vec<_> = rule_lines(text).collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0].line, 3);
        assert_eq!(lines[0].fields, vec!["a", "b"]);
        assert_eq!(lines[1].fields, vec!["c", "d"]);
    }

    #[test]
    fn arity_is_enforced() {
        let err = fixed_arity("x.tsv", "a\tb\nc\n", 2).unwrap_err();
        assert!(err.to_string().contains("x.tsv:2"));
    }

    #[test]
    fn whitespace_collapses() {
        assert_eq!(collapse_whitespace("  a \t b\n\nc "), "a b c");
        assert_eq!(collapse_whitespace(""), "");
    }
}
