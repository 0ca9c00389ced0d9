//! JSONL corpus output, key/term queries and word-cloud reports.

mod cloud;
mod jsonl;
mod query;

pub use cloud::{render_wordcloud_svg, write_wordcloud_svg, CLOUD_TERMS, CLOUD_WIDTH};
pub use jsonl::{read_jsonl, read_jsonl_file, to_jsonl_line, write_jsonl, write_jsonl_file, JsonlRead, JSONL_KEYS};
pub use query::{query_corpus, term_frequencies, FrequencyTable, JsonKey, QuerySpec, Stopwords};
