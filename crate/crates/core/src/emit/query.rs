use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lingpipe::tokenize;
use crate::model::EnrichedQuote;
use crate::rules::rule_lines;

use super::jsonl::JSONL_KEYS;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum JsonKey {
    Id,
    SpeakerName,
    JobRole,
    Affiliation,
    Sentences,
    Neologism,
    Quotedphrases,
    Simile,
    Metaphor,
    Emotion,
    Entities,
}

impl JsonKey {
    pub const ALL: [JsonKey; 11] = [
        JsonKey::Id,
        JsonKey::SpeakerName,
        JsonKey::JobRole,
        JsonKey::Affiliation,
        JsonKey::Sentences,
        JsonKey::Neologism,
        JsonKey::Quotedphrases,
        JsonKey::Simile,
        JsonKey::Metaphor,
        JsonKey::Emotion,
        JsonKey::Entities,
    ];

    pub fn as_str(self) -> &'static str {
        JSONL_KEYS[self as usize]
    }

    /// String renderings of the value under this key; one per list element.
    pub fn values(self, r: &EnrichedQuote) -> Vec<String> {
        match self {
            JsonKey::Id => vec![r.id.clone()],
            JsonKey::SpeakerName => vec![r.speaker.clone()],
            JsonKey::JobRole => vec![r.job_title.clone()],
            JsonKey::Affiliation => vec![r.affiliation.clone()],
            JsonKey::Sentences => r.sentences.clone(),
            JsonKey::Neologism => r.neologisms.clone(),
            JsonKey::Quotedphrases => r.quoted_phrases.clone(),
            JsonKey::Simile => r.similes.iter().map(|s| s.text.clone()).collect(),
            JsonKey::Metaphor => r.metaphors.iter().map(|m| m.text.clone()).collect(),
            JsonKey::Emotion => vec![r.emotion.label.as_str().to_string()],
            JsonKey::Entities => r.entities.iter().map(|e| e.surface.clone()).collect(),
        }
    }
}

impl fmt::Display for JsonKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for JsonKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        JsonKey::ALL
            .into_iter()
            .find(|k| k.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownKey(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuerySpec {
    pub key: JsonKey,
    /// lowercased, each a sequence of one or more words
    pub terms: Vec<String>,
    pub output_path: Option<PathBuf>,
}

impl QuerySpec {
    /// `terms` is a comma-delimited list.
    pub fn parse(key: &str, terms: &str, output_path: Option<PathBuf>) -> Result<Self> {
        let key = key.parse()?;
        Self::new(key, terms.split(','), output_path)
    }

    pub fn new<I, S>(key: JsonKey, terms: I, output_path: Option<PathBuf>) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let terms: Vec<String> = terms
            .into_iter()
            .map(|t| t.as_ref().trim().to_lowercase())
            .filter(|t| tokenize(t).iter().any(|tok| tok.is_word()))
            .collect();
        if terms.is_empty() {
            return Err(Error::InvalidQuery("no search terms given".into()));
        }
        Ok(QuerySpec {
            key,
            terms,
            output_path,
        })
    }
}

fn lower_tokens(text: &str) -> Vec<String> {
    tokenize(text).iter().map(|t| t.lower()).collect()
}

fn contains_sequence(haystack: &[String], needle: &[String]) -> bool {
    !needle.is_empty() && haystack.windows(needle.len()).any(|w| w == needle)
}

/// Records where any term occurs as a whole word (or word sequence) in the
/// value under the query key. Input order is kept.
pub fn query_corpus<'a>(records: &'a [EnrichedQuote], q: &QuerySpec) -> Vec<&'a EnrichedQuote> {
    let needles: Vec<Vec<String>> = q.terms.iter().map(|t| lower_tokens(t)).collect();
    records
        .iter()
        .filter(|r| {
            q.key.values(r).iter().any(|v| {
                let hay = lower_tokens(v);
                needles.iter().any(|n| contains_sequence(&hay, n))
            })
        })
        .collect()
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Stopwords(HashSet<String>);

impl Stopwords {
    pub fn parse(text: &str) -> Self {
        rule_lines(text)
            .filter_map(|l| l.fields.first().map(|w| w.to_lowercase()))
            .collect()
    }

    pub fn contains(&self, word: &str) -> bool {
        self.0.contains(word)
    }
}

impl FromIterator<String> for Stopwords {
    fn from_iter<I: IntoIterator<Item = String>>(iter: I) -> Self {
        Stopwords(iter.into_iter().collect())
    }
}

/// Lowercased word → count; every count is at least 1.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FrequencyTable(BTreeMap<String, usize>);

impl FrequencyTable {
    pub fn add(&mut self, word: &str, count: usize) {
        if count > 0 {
            *self.0.entry(word.to_lowercase()).or_default() += count;
        }
    }

    pub fn get(&self, word: &str) -> usize {
        self.0.get(word).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, usize)> {
        self.0.iter().map(|(w, &c)| (w.as_str(), c))
    }

    /// The `n` most frequent words by (count desc, word asc).
    pub fn top(&self, n: usize) -> Vec<(&str, usize)> {
        let mut all: Vec<_> = self.iter().collect();
        all.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));
        all.truncate(n);
        all
    }
}

impl<'a> FromIterator<(&'a str, usize)> for FrequencyTable {
    fn from_iter<I: IntoIterator<Item = (&'a str, usize)>>(iter: I) -> Self {
        let mut t = FrequencyTable::default();
        for (w, c) in iter {
            t.add(w, c);
        }
        t
    }
}

const MIN_TERM_CHARS: usize = 3;

pub fn term_frequencies(
    records: &[&EnrichedQuote],
    key: JsonKey,
    stopwords: &Stopwords,
) -> FrequencyTable {
    let mut table = FrequencyTable::default();
    for r in records {
        for value in key.values(r) {
            for tok in tokenize(&value).iter().filter(|t| t.is_word()) {
                let w = tok.lower();
                if w.chars().count() >= MIN_TERM_CHARS && !stopwords.contains(&w) {
                    table.add(&w, 1);
                }
            }
        }
    }
    table
}
