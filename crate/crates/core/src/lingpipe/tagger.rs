use std::collections::HashMap;

use crate::error::Result;
use crate::lingpipe::token::{Tag, Token};
use crate::rules::{fixed_arity, rule_error};

/// Word lexicon plus ordered suffix fallbacks.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PosLexicon {
    words: HashMap<String, Tag>,
    suffix_rules: Vec<(String, Tag)>,
}

impl PosLexicon {
    pub fn parse(
        lexicon_source: &str,
        lexicon: &str,
        suffix_source: &str,
        suffixes: &str,
    ) -> Result<Self> {
        let mut out = PosLexicon::default();
        for (line, fields) in fixed_arity(lexicon_source, lexicon, 2)? {
            let tag = fields[1]
                .parse()
                .map_err(|e| rule_error(lexicon_source, line, format!("{e}")))?;
            out.words.insert(fields[0].to_lowercase(), tag);
        }
        for (line, fields) in fixed_arity(suffix_source, suffixes, 2)? {
            let tag = fields[1]
                .parse()
                .map_err(|e| rule_error(suffix_source, line, format!("{e}")))?;
            out.suffix_rules.push((fields[0].to_lowercase(), tag));
        }
        Ok(out)
    }

    pub fn insert_word(&mut self, word: &str, tag: Tag) {
        self.words.insert(word.to_lowercase(), tag);
    }

    pub fn push_suffix(&mut self, suffix: &str, tag: Tag) {
        self.suffix_rules.push((suffix.to_lowercase(), tag));
    }

    /// Lexicon entry, else first suffix rule whose suffix is a proper
    /// suffix of the word, else NOUN.
    pub fn tag_word(&self, word: &str) -> Tag {
        if !word.chars().any(char::is_alphabetic) {
            return Tag::Other;
        }
        let lower = word.to_lowercase();
        if let Some(&tag) = self.words.get(&lower) {
            return tag;
        }
        self.suffix_rules
            .iter()
            .find(|(suffix, _)| lower.len() > suffix.len() && lower.ends_with(suffix.as_str()))
            .map_or(Tag::Noun, |&(_, tag)| tag)
    }
}

pub fn pos_tag(tokens: Vec<Token>, lexicon: &PosLexicon) -> Vec<Token> {
    tokens
        .into_iter()
        .map(|mut t| {
            t.tag = Some(if t.is_word() {
                lexicon.tag_word(&t.surface)
            } else {
                Tag::Other
            });
            t
        })
        .collect()
}
