//! Highlighted phrases, neologisms, similes and metaphors.

mod highlight;
mod metaphor;
mod neologism;
mod pmi;
mod simile;

pub use highlight::extract_highlighted;
pub use metaphor::{
    extract_isa_metaphors, extract_of_metaphors, harvest_np_of_np, np_of_np_occurrences,
    IsAFilter, MetaphorKind, MetaphorMatch, NpOfNp,
};
pub use neologism::{detect_neologisms, Dictionary, NeologismContext, WordFrequencies};
pub use pmi::{pmi_score, PmiTable, PmiVariant};
pub use simile::{extract_similes, SimileMatch};
