use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lingpipe::tokenize;
use crate::rules::{collapse_whitespace, fixed_arity, rule_error};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum EntityClass {
    Person,
    Norp,
    Fac,
    Org,
    Gpe,
    Loc,
    Product,
    Event,
    WorkOfArt,
    Law,
    Language,
}

impl EntityClass {
    pub const ALL: [EntityClass; 11] = [
        EntityClass::Person,
        EntityClass::Norp,
        EntityClass::Fac,
        EntityClass::Org,
        EntityClass::Gpe,
        EntityClass::Loc,
        EntityClass::Product,
        EntityClass::Event,
        EntityClass::WorkOfArt,
        EntityClass::Law,
        EntityClass::Language,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            EntityClass::Person => "PERSON",
            EntityClass::Norp => "NORP",
            EntityClass::Fac => "FAC",
            EntityClass::Org => "ORG",
            EntityClass::Gpe => "GPE",
            EntityClass::Loc => "LOC",
            EntityClass::Product => "PRODUCT",
            EntityClass::Event => "EVENT",
            EntityClass::WorkOfArt => "WORK_OF_ART",
            EntityClass::Law => "LAW",
            EntityClass::Language => "LANGUAGE",
        }
    }
}

impl fmt::Display for EntityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EntityClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        EntityClass::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::Config(format!("unknown entity class {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntityMention {
    pub surface: String,
    pub class: EntityClass,
    /// character offset into the quote
    pub start: usize,
}

impl EntityMention {
    pub fn char_end(&self) -> usize {
        self.start + self.surface.chars().count()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Gazetteer {
    phrases: HashMap<String, EntityClass>,
    longest: usize,
}

fn phrase_key(phrase: &str) -> String {
    collapse_whitespace(&phrase.to_lowercase())
}

impl Gazetteer {
    pub fn parse(source: &str, text: &str) -> Result<Self> {
        let mut g = Gazetteer::default();
        for (line, fields) in fixed_arity(source, text, 2)? {
            let class: EntityClass = fields[1]
                .parse()
                .map_err(|_| rule_error(source, line, format!("unknown class {:?}", fields[1])))?;
            if !g.insert(fields[0], class) {
                return Err(rule_error(source, line, format!("duplicate phrase {:?}", fields[0])));
            }
        }
        Ok(g)
    }

    /// Adds `phrase` unless an equal phrase (ignoring case) is present.
    /// Returns whether it was added.
    pub fn insert(&mut self, phrase: &str, class: EntityClass) -> bool {
        let key = phrase_key(phrase);
        let width = tokenize(&key).len();
        if width == 0 || self.phrases.contains_key(&key) {
            return false;
        }
        self.longest = self.longest.max(width);
        self.phrases.insert(key, class);
        true
    }

    /// Merges another gazetteer; existing phrases keep their class.
    pub fn extend(&mut self, other: &Gazetteer) {
        let mut entries: Vec<_> = other.phrases.iter().collect();
        entries.sort();
        for (phrase, &class) in entries {
            self.insert(phrase, class);
        }
    }

    pub fn class_of(&self, phrase: &str) -> Option<EntityClass> {
        self.phrases.get(&phrase_key(phrase)).copied()
    }

    pub fn len(&self) -> usize {
        self.phrases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phrases.is_empty()
    }
}

/// Scans left to right for the longest token-aligned gazetteer phrase at each
/// position. Matching ignores case and the amount of whitespace between words.
pub fn extract_entities(quote: &str, gazetteer: &Gazetteer) -> Vec<EntityMention> {
    if gazetteer.is_empty() {
        return Vec::new();
    }
    let tokens = tokenize(quote);
    let mut out = Vec::new();
    let mut i = 0;
    while i < tokens.len() {
        let max_end = tokens.len().min(i + gazetteer.longest);
        let hit = (i + 1..=max_end).rev().find_map(|end| {
            let span = &quote[tokens[i].byte_start..tokens[end - 1].byte_end()];
            gazetteer.phrases.get(&phrase_key(span)).map(|&c| (end, span, c))
        });
        match hit {
            Some((end, span, class)) => {
                out.push(EntityMention {
                    surface: span.to_string(),
                    class,
                    start: tokens[i].start,
                });
                i = end;
            }
            None => i += 1,
        }
    }
    out
}
