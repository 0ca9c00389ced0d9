//! Enrichment of reported-speech quote corpora.
//!
//! Raw tab-separated quote rows are cleaned, language-filtered,
//! deduplicated, normalized and imputed, then annotated with sentences,
//! neologisms, highlighted phrases, similes, metaphors, emotion scores and
//! entity mentions, and written as JSON Lines.

pub mod affect;
pub mod config;
pub mod emit;
pub mod error;
pub mod figurative;
pub mod ingest;
pub mod lingpipe;
pub mod model;
pub mod normalize;
pub mod pipeline;
pub mod resources;
mod rules;

pub use config::PipelineConfig;
pub use error::{Error, Result};
pub use model::{EnrichedQuote, QuoteRecord, RawQuoteRecord};
pub use pipeline::{Pipeline, PipelineOutput, PipelineStats, Stage, StageSnapshot};
pub use resources::Resources;
pub use rules::collapse_whitespace;
