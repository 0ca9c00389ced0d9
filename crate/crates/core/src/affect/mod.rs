//! Lexicon emotion scoring and gazetteer entity tagging.

mod emotion;
mod entities;

pub use emotion::{score_emotions, Emotion, EmotionLabel, EmotionLexicon, EmotionScores};
pub use entities::{extract_entities, EntityClass, EntityMention, Gazetteer};
