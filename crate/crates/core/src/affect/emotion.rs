use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lingpipe::Token;
use crate::rules::{collapse_whitespace, fixed_arity, rule_error};

/// Declaration order is the tie order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Emotion {
    Anger,
    Fear,
    Joy,
    Sadness,
}

impl Emotion {
    pub const ALL: [Emotion; 4] = [Emotion::Anger, Emotion::Fear, Emotion::Joy, Emotion::Sadness];

    pub fn as_str(self) -> &'static str {
        match self {
            Emotion::Anger => "anger",
            Emotion::Fear => "fear",
            Emotion::Joy => "joy",
            Emotion::Sadness => "sadness",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl FromStr for Emotion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Emotion::ALL
            .into_iter()
            .find(|e| e.as_str() == s)
            .ok_or_else(|| Error::Config(format!("unknown emotion {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EmotionLabel {
    Anger,
    Fear,
    Joy,
    Sadness,
    #[default]
    None,
}

impl EmotionLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            EmotionLabel::Anger => "anger",
            EmotionLabel::Fear => "fear",
            EmotionLabel::Joy => "joy",
            EmotionLabel::Sadness => "sadness",
            EmotionLabel::None => "none",
        }
    }
}

impl From<Emotion> for EmotionLabel {
    fn from(e: Emotion) -> Self {
        match e {
            Emotion::Anger => EmotionLabel::Anger,
            Emotion::Fear => EmotionLabel::Fear,
            Emotion::Joy => EmotionLabel::Joy,
            Emotion::Sadness => EmotionLabel::Sadness,
        }
    }
}

impl fmt::Display for EmotionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct EmotionScores {
    pub anger: f64,
    pub fear: f64,
    pub joy: f64,
    pub sadness: f64,
    pub label: EmotionLabel,
}

impl EmotionScores {
    pub fn get(&self, e: Emotion) -> f64 {
        match e {
            Emotion::Anger => self.anger,
            Emotion::Fear => self.fear,
            Emotion::Joy => self.joy,
            Emotion::Sadness => self.sadness,
        }
    }

    /// Builds scores and derives the label: the first maximum in tie order,
    /// or `none` when every score is zero.
    pub fn from_scores(scores: [f64; 4]) -> Self {
        let mut best: Option<(Emotion, f64)> = None;
        for e in Emotion::ALL {
            let s = scores[e.index()];
            if s > 0.0 && best.is_none_or(|(_, b)| s > b) {
                best = Some((e, s));
            }
        }
        EmotionScores {
            anger: scores[0],
            fear: scores[1],
            joy: scores[2],
            sadness: scores[3],
            label: best.map_or(EmotionLabel::None, |(e, _)| e.into()),
        }
    }
}

/// Lowercased one- or two-word terms with per-emotion weights.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct EmotionLexicon {
    terms: HashMap<String, Vec<(Emotion, f64)>>,
}

impl EmotionLexicon {
    pub fn parse(source: &str, text: &str) -> Result<Self> {
        let mut lex = EmotionLexicon::default();
        for (line, fields) in fixed_arity(source, text, 3)? {
            let emotion: Emotion = fields[1]
                .parse()
                .map_err(|_| rule_error(source, line, format!("unknown emotion {:?}", fields[1])))?;
            let weight: f64 = fields[2]
                .parse()
                .map_err(|_| rule_error(source, line, format!("bad weight {:?}", fields[2])))?;
            lex.insert(fields[0], emotion, weight)
                .map_err(|e| rule_error(source, line, e.to_string()))?;
        }
        Ok(lex)
    }

    pub fn insert(&mut self, term: &str, emotion: Emotion, weight: f64) -> Result<()> {
        let key = collapse_whitespace(&term.to_lowercase());
        let words = key.split(' ').filter(|w| !w.is_empty()).count();
        if !(1..=2).contains(&words) {
            return Err(Error::Config(format!("term {term:?} must have one or two words")));
        }
        if !(0.0..=1.0).contains(&weight) {
            return Err(Error::Config(format!("weight {weight} outside [0, 1]")));
        }
        let entry = self.terms.entry(key).or_default();
        if entry.iter().any(|&(e, _)| e == emotion) {
            return Err(Error::Config(format!("duplicate entry {term:?} / {}", emotion.as_str())));
        }
        entry.push((emotion, weight));
        Ok(())
    }

    pub fn lookup(&self, term: &str) -> Option<&[(Emotion, f64)]> {
        self.terms.get(term).map(Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Every weight multiplied by `factor`, which must lie in (0, 1].
    pub fn scaled(&self, factor: f64) -> Self {
        assert!(factor > 0.0 && factor <= 1.0, "scale factor {factor} outside (0, 1]");
        let terms = self
            .terms
            .iter()
            .map(|(k, v)| (k.clone(), v.iter().map(|&(e, w)| (e, w * factor)).collect()))
            .collect();
        EmotionLexicon { terms }
    }
}

/// Averages the weights of all lexicon matches. Two-word terms are tried
/// before single words and consume both tokens.
pub fn score_emotions(tokens: &[Token], lexicon: &EmotionLexicon) -> EmotionScores {
    let mut sums = [0.0f64; 4];
    let mut matches = 0usize;
    let mut i = 0;
    while i < tokens.len() {
        if !tokens[i].is_word() {
            i += 1;
            continue;
        }
        let word = tokens[i].lower();
        let bigram = tokens
            .get(i + 1)
            .filter(|t| t.is_word())
            .and_then(|t| lexicon.lookup(&format!("{word} {}", t.lower())));
        let (hit, width) = match bigram {
            Some(h) => (Some(h), 2),
            None => (lexicon.lookup(&word), 1),
        };
        if let Some(weights) = hit {
            matches += 1;
            for &(e, w) in weights {
                sums[e.index()] += w;
            }
        }
        i += width;
    }
    if matches == 0 {
        return EmotionScores::default();
    }
    let n = matches as f64;
    EmotionScores::from_scores(sums.map(|s| s / n))
}
