use std::collections::{BTreeSet, HashMap, HashSet};

use crate::affect::EntityMention;
use crate::lingpipe::{tokenize, Token};
use crate::model::QuoteRecord;
use crate::rules::rule_lines;

const MIN_LEN: usize = 4;

/// Union of the US and UK word lists, lowercased.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Dictionary(HashSet<String>);

impl Dictionary {
    pub fn parse(texts: &[&str]) -> Self {
        let mut words = HashSet::new();
        for text in texts {
            for line in rule_lines(text) {
                if let Some(w) = line.fields.first() {
                    words.insert(w.to_lowercase());
                }
            }
        }
        Dictionary(words)
    }

    pub fn contains(&self, word: &str) -> bool {
        self.0.contains(&word.to_lowercase())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl<S: AsRef<str>> FromIterator<S> for Dictionary {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        Dictionary(iter.into_iter().map(|s| s.as_ref().to_lowercase()).collect())
    }
}

/// Lowercased word-token counts across the corpus.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WordFrequencies(HashMap<String, usize>);

impl WordFrequencies {
    pub fn add_tokens(&mut self, tokens: &[Token]) {
        for t in tokens.iter().filter(|t| t.is_word()) {
            *self.0.entry(t.lower()).or_default() += 1;
        }
    }

    pub fn add_text(&mut self, text: &str) {
        self.add_tokens(&tokenize(text));
    }

    pub fn get(&self, word: &str) -> usize {
        self.0.get(&word.to_lowercase()).copied().unwrap_or(0)
    }

    pub fn merge(&mut self, other: WordFrequencies) {
        for (w, c) in other.0 {
            *self.0.entry(w).or_default() += c;
        }
    }
}

pub struct NeologismContext<'a> {
    pub dictionary: &'a Dictionary,
    pub frequencies: &'a WordFrequencies,
    pub min_count: usize,
}

/// Words of four or more letters that no dictionary lists, that are not part
/// of the speaker, job title, affiliation or any entity mention, and that
/// recur at least `min_count` times in the corpus. Sorted and lowercased.
pub fn detect_neologisms(
    tokens: &[Token],
    record: &QuoteRecord,
    entities: &[EntityMention],
    ctx: &NeologismContext<'_>,
) -> Vec<String> {
    let own_words: HashSet<String> = [&record.speaker, &record.job_title, &record.affiliation]
        .into_iter()
        .flat_map(|field| tokenize(field))
        .map(|t| t.lower())
        .collect();
    let in_entity = |t: &Token| {
        entities
            .iter()
            .any(|e| t.start < e.char_end() && e.start < t.char_end())
    };
    let found: BTreeSet<String> = tokens
        .iter()
        .filter(|t| t.surface.chars().count() >= MIN_LEN && t.surface.chars().all(char::is_alphabetic))
        .filter(|t| !ctx.dictionary.contains(&t.surface))
        .filter(|t| !own_words.contains(&t.lower()))
        .filter(|t| !in_entity(t))
        .filter(|t| ctx.frequencies.get(&t.surface) >= ctx.min_count)
        .map(Token::lower)
        .collect();
    found.into_iter().collect()
}
