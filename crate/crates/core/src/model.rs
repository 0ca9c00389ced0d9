//! Record types shared by every stage of the pipeline.

use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::affect::{EmotionScores, EntityMention};
use crate::figurative::{MetaphorMatch, SimileMatch};

/// One TSV row exactly as read.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RawQuoteRecord {
    pub id: String,
    pub speaker: String,
    pub job_title: String,
    pub affiliation: String,
    pub quote: String,
}

/// A cleaned record. Built from a [`RawQuoteRecord`] once its quote has been
/// through HTML cleaning; later stages normalize and impute it in place.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QuoteRecord {
    pub id: String,
    pub speaker: String,
    pub job_title: String,
    pub affiliation: String,
    pub quote: String,
    pub imputed_job_title: bool,
    pub imputed_affiliation: bool,
}

impl QuoteRecord {
    pub fn fingerprint(&self) -> Fingerprint {
        quote_fingerprint(&self.speaker, &self.quote)
    }
}

/// The unit written to the JSONL corpus, one per line.
///
/// Field order here is the on-disk key order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnrichedQuote {
    #[serde(rename = "ID")]
    pub id: String,
    #[serde(rename = "SpeakerName")]
    pub speaker: String,
    #[serde(rename = "JobRole")]
    pub job_title: String,
    #[serde(rename = "Affiliation")]
    pub affiliation: String,
    #[serde(rename = "Sentences")]
    pub sentences: Vec<String>,
    #[serde(rename = "Neologism")]
    pub neologisms: Vec<String>,
    #[serde(rename = "Quotedphrases")]
    pub quoted_phrases: Vec<String>,
    #[serde(rename = "Simile")]
    pub similes: Vec<SimileMatch>,
    #[serde(rename = "Metaphor")]
    pub metaphors: Vec<MetaphorMatch>,
    #[serde(rename = "Emotion")]
    pub emotion: EmotionScores,
    #[serde(rename = "Entities")]
    pub entities: Vec<EntityMention>,
}

impl EnrichedQuote {
    /// The quote text reassembled from its sentences.
    pub fn text(&self) -> String {
        self.sentences.join(" ")
    }
}

/// SHA-256 over `speaker 0x1f quote`, hex encoded.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint(String);

impl Fingerprint {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn quote_fingerprint(speaker: &str, quote: &str) -> Fingerprint {
    let mut hasher = Sha256::new();
    hasher.update(speaker.as_bytes());
    hasher.update([0x1f]);
    hasher.update(quote.as_bytes());
    let digest = hasher.finalize();
    let mut hex = String::with_capacity(64);
    for byte in digest.iter() {
        hex.push_str(&format!("{byte:02x}"));
    }
    Fingerprint(hex)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Violation {
    IdEmpty,
    SpeakerEmpty,
    QuoteEmpty,
}

impl Violation {
    pub fn as_str(self) -> &'static str {
        match self {
            Violation::IdEmpty => "id_empty",
            Violation::SpeakerEmpty => "speaker_empty",
            Violation::QuoteEmpty => "quote_empty",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn validate_record(record: &RawQuoteRecord) -> Vec<Violation> {
    let mut violations = Vec::new();
    if record.id.trim().is_empty() {
        violations.push(Violation::IdEmpty);
    }
    if record.speaker.trim().is_empty() {
        violations.push(Violation::SpeakerEmpty);
    }
    if record.quote.trim().is_empty() {
        violations.push(Violation::QuoteEmpty);
    }
    violations
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw(id: &str, speaker: &str, quote: &str) -> RawQuoteRecord {
        RawQuoteRecord {
            id: id.into(),
            speaker: speaker.into(),
            quote: quote.into(),
            ..Default::default()
        }
    }

    #[test]
    fn fingerprint_is_stable_for_equal_pairs() {
        let q = "You know what, let them line up; I can handle it.";
        let a = quote_fingerprint("Dick Fuld", q);
        let b = quote_fingerprint("Dick Fuld", q);
        assert_eq!(a, b);
        assert_eq!(a.as_str().len(), 64);
        assert_eq!(quote_fingerprint("A", ""), quote_fingerprint("A", ""));
    }

    #[test]
    fn fingerprint_separates_speakers() {
        let (sa, qa) = ("A", "x");
        let (sb, qb) = ("B", "x");
        assert_ne!((sa, qa), (sb, qb));
        assert_ne!(quote_fingerprint(sa, qa), quote_fingerprint(sb, qb));
    }

    #[test]
    fn fingerprint_separator_prevents_concatenation_collisions() {
        assert_ne!(quote_fingerprint("ab", "c"), quote_fingerprint("a", "bc"));
    }

    #[test]
    fn fingerprint_known_value() {
        // reference digests from python's hashlib
        assert_eq!(
            quote_fingerprint("", "").as_str(),
            "ffe679bb831c95b67dc17819c63c5090d221aac6f4c7bf530f594ab43d21fa1e"
        );
        assert_eq!(
            quote_fingerprint(
                "Dick Fuld",
                "You know what, let them line up; I can handle it."
            )
            .as_str(),
            "7bb68c2e6c2f6be83441d9b0e17f4161b3080f96eb182e34e2273f27e739c76a"
        );
    }

    #[test]
    fn validation() {
        assert!(validate_record(&raw("Q1", "Dick Fuld", "I can handle it.")).is_empty());
        assert_eq!(
            validate_record(&raw("Q1", "", "text")),
            vec![Violation::SpeakerEmpty]
        );
        assert_eq!(
            validate_record(&raw("Q1", "A", " \t ")),
            vec![Violation::QuoteEmpty]
        );
        let v: Vec<_> = validate_record(&raw("", "", ""))
            .into_iter()
            .map(|v| v.to_string())
            .collect();
        assert_eq!(v, ["id_empty", "speaker_empty", "quote_empty"]);
    }
}
