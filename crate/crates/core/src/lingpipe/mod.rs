//! Tokenization, sentence splitting, part-of-speech tagging and the noun
//! taxonomy.

mod sentence;
mod tagger;
mod taxonomy;
mod token;

pub use sentence::{sentence_spans, split_sentences, Abbreviations};
pub use tagger::{pos_tag, PosLexicon};
pub use taxonomy::TaxonomyStore;
pub use token::{tokenize, Tag, Token};

use std::ops::Range;

/// A quote split into sentences, each with its tagged tokens. Token offsets
/// are relative to the whole quote.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalyzedQuote {
    pub text: String,
    pub sentences: Vec<Range<usize>>,
    pub tokens: Vec<Token>,
    /// token index range for each sentence
    pub sentence_tokens: Vec<Range<usize>>,
}

impl AnalyzedQuote {
    pub fn new(text: &str, abbreviations: &Abbreviations, lexicon: &PosLexicon) -> Self {
        let sentences = sentence_spans(text, abbreviations);
        let tokens = pos_tag(tokenize(text), lexicon);
        let sentence_tokens = sentences
            .iter()
            .map(|span| {
                let first = tokens.partition_point(|t| t.byte_start < span.start);
                let end = tokens.partition_point(|t| t.byte_start < span.end);
                first..end
            })
            .collect();
        AnalyzedQuote {
            text: text.to_string(),
            sentences,
            tokens,
            sentence_tokens,
        }
    }

    pub fn sentence_strings(&self) -> Vec<String> {
        self.sentences
            .iter()
            .map(|r| self.text[r.clone()].to_string())
            .collect()
    }

    pub fn sentence_token_slices(&self) -> impl Iterator<Item = &[Token]> {
        self.sentence_tokens.iter().map(|r| &self.tokens[r.clone()])
    }
}
