use std::collections::HashSet;
use std::ops::Range;

use crate::rules::rule_lines;

/// Words ending in `.` that do not end a sentence.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Abbreviations(HashSet<String>);

impl Abbreviations {
    pub fn parse(text: &str) -> Self {
        Abbreviations(
            rule_lines(text)
                .filter_map(|l| l.fields.first().map(|w| w.to_lowercase()))
                .collect(),
        )
    }

    pub fn contains(&self, word: &str) -> bool {
        self.0.contains(&word.to_lowercase())
    }
}

impl<S: AsRef<str>> FromIterator<S> for Abbreviations {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        Abbreviations(iter.into_iter().map(|s| s.as_ref().to_lowercase()).collect())
    }
}

fn is_terminator(c: char) -> bool {
    matches!(c, '.' | '!' | '?' | ';')
}

/// Byte ranges of the trimmed, non-empty sentences of `text`.
pub fn sentence_spans(text: &str, abbreviations: &Abbreviations) -> Vec<Range<usize>> {
    let mut spans = Vec::new();
    let mut start = 0;
    let mut iter = text.char_indices().peekable();
    while let Some((i, c)) = iter.next() {
        if !is_terminator(c) {
            continue;
        }
        let boundary = iter.peek().is_none_or(|&(_, n)| n.is_whitespace());
        if !boundary {
            continue;
        }
        let end = i + c.len_utf8();
        if c == '.' && abbreviations.contains(word_before(&text[start..end])) {
            continue;
        }
        push_trimmed(text, start..end, &mut spans);
        start = end;
    }
    push_trimmed(text, start..text.len(), &mut spans);
    spans
}

/// The last whitespace-delimited word of `segment`, stripped of leading
/// punctuation such as opening quotes.
fn word_before(segment: &str) -> &str {
    let word = segment
        .rsplit(char::is_whitespace)
        .next()
        .unwrap_or(segment);
    word.trim_start_matches(|c: char| !c.is_alphanumeric())
}

fn push_trimmed(text: &str, range: Range<usize>, spans: &mut Vec<Range<usize>>) {
    let piece = &text[range.clone()];
    let lead = piece.len() - piece.trim_start().len();
    let trail = piece.len() - piece.trim_end().len();
    if lead + trail < piece.len() {
        spans.push(range.start + lead..range.end - trail);
    }
}

pub fn split_sentences(text: &str, abbreviations: &Abbreviations) -> Vec<String> {
    sentence_spans(text, abbreviations)
        .into_iter()
        .map(|r| text[r].to_string())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn abbrevs() -> Abbreviations {
        ["Mr.", "U.S.", "Inc."].into_iter().collect()
    }

    /// Word-at-a-time scanner used as an independent reference.
    fn scanner(text: &str, abbrevs: &[&str]) -> Vec<String> {
        let mut out = Vec::new();
        let mut current: Vec<&str> = Vec::new();
        for word in text.split_whitespace() {
            current.push(word);
            let last = word.chars().last().unwrap();
            if matches!(last, '.' | '!' | '?' | ';') {
                let bare = word.trim_start_matches(|c: char| !c.is_alphanumeric());
                if last == '.' && abbrevs.iter().any(|a| a.eq_ignore_ascii_case(bare)) {
                    continue;
                }
                out.push(current.join(" "));
                current.clear();
            }
        }
        if !current.is_empty() {
            out.push(current.join(" "));
        }
        out
    }

    #[test]
    fn basic_split() {
        assert_eq!(
            split_sentences("It rose. It fell.", &abbrevs()),
            ["It rose.", "It fell."]
        );
        assert!(split_sentences("", &abbrevs()).is_empty());
        assert!(split_sentences("   ", &abbrevs()).is_empty());
    }

    #[test]
    fn abbreviations_suppress_splits() {
        let text = "Mr. Fuld spoke.";
        let expected = scanner(text, &["Mr.", "U.S.", "Inc."]);
        assert_eq!(expected, ["Mr. Fuld spoke."]);
        assert_eq!(split_sentences(text, &abbrevs()), expected);
        assert_eq!(
            split_sentences("The U.S. economy grew! Apple Inc. agreed; shares rose", &abbrevs()),
            ["The U.S. economy grew!", "Apple Inc. agreed;", "shares rose"]
        );
    }

    #[test]
    fn terminator_needs_following_space() {
        assert_eq!(
            split_sentences("Prices rose 3.5 percent?! Really.", &abbrevs()),
            ["Prices rose 3.5 percent?!", "Really."]
        );
    }

    proptest! {
        #[test]
        fn agrees_with_scanner(words in prop::collection::vec(
            prop_oneof!["[a-z]{1,6}", "[a-z]{1,5}[.!?;]", Just("Mr.".to_string()), Just("U.S.".to_string()), Just("\"Inc.".to_string())],
            0..20,
        )) {
            let text = words.join(" ");
            prop_assert_eq!(
                split_sentences(&text, &abbrevs()),
                scanner(&text, &["Mr.", "U.S.", "Inc."])
            );
        }
    }
}
