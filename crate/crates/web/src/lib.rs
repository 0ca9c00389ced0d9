//! wasm-bindgen bindings for the single-page demo in `www/`.

use std::cell::OnceCell;

use wasm_bindgen::prelude::*;

use quotekit::emit::{query_corpus, read_jsonl, render_wordcloud_svg, term_frequencies, QuerySpec};
use quotekit::ingest::{detect_language as detect, parse_tsv_str};
use quotekit::{Pipeline, PipelineConfig};

thread_local! {
    static PIPELINE: OnceCell<Pipeline> = const { OnceCell::new() };
}

fn with_pipeline<T>(f: impl FnOnce(&Pipeline) -> T) -> T {
    PIPELINE.with(|cell| {
        let p = cell.get_or_init(|| {
            Pipeline::from_config(PipelineConfig::default()).expect("bundled resources load")
        });
        f(p)
    })
}

/// Lines without a tab are treated as bare quotes.
fn as_tsv(input: &str) -> String {
    let mut out = String::new();
    for (i, line) in input.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        if line.contains('\t') {
            out.push_str(line);
        } else {
            out.push_str(&format!("W{}\tAnonymous\t\t\t{line}", i + 1));
        }
        out.push('\n');
    }
    out
}

/// Enriches pasted TSV rows (or one quote per line) and returns JSON Lines.
pub fn annotate_text(input: &str) -> String {
    let parsed = parse_tsv_str(&as_tsv(input));
    let out = with_pipeline(|p| p.run(parsed));
    let mut jsonl = String::new();
    for r in &out.records {
        jsonl.push_str(&quotekit::emit::to_jsonl_line(r));
        jsonl.push('\n');
    }
    jsonl
}

pub fn language_of(text: &str) -> String {
    with_pipeline(|p| detect(text, &p.resources.profiles).to_string())
}

/// SVG word cloud of the values under `key` in the records matching `terms`.
pub fn cloud_svg(jsonl: &str, key: &str, terms: &str) -> Result<String, String> {
    let spec = QuerySpec::parse(key, terms, None).map_err(|e| e.to_string())?;
    let read = read_jsonl(jsonl.as_bytes(), std::path::Path::new("corpus")).map_err(|e| e.to_string())?;
    let hits = query_corpus(&read.records, &spec);
    let table = with_pipeline(|p| term_frequencies(&hits, spec.key, &p.resources.stopwords));
    render_wordcloud_svg(&table).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn annotate(input: &str) -> String {
    annotate_text(input)
}

#[wasm_bindgen(js_name = detectLanguage)]
pub fn detect_language(text: &str) -> String {
    language_of(text)
}

#[wasm_bindgen(js_name = wordCloud)]
pub fn word_cloud(jsonl: &str, key: &str, terms: &str) -> Result<String, JsValue> {
    cloud_svg(jsonl, key, terms).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bare_quotes_are_annotated() {
        let out = annotate_text("We need a currency like the dollar.\n\nThis tax credit is a lifeline.");
        let lines: Vec<serde_json::Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0]["Simile"][0]["text"], "currency like the dollar");
        assert_eq!(lines[1]["Metaphor"][0]["kind"], "is_a");
    }

    #[test]
    fn language() {
        assert_eq!(language_of("Der schnelle braune Fuchs springt über den faulen Hund."), "de");
        assert_eq!(language_of("hi"), "und");
    }

    #[test]
    fn cloud_from_annotations() {
        let corpus = annotate_text("We need a currency like the dollar.\nIt is as good as a coin flip.");
        let svg = cloud_svg(&corpus, "Simile", "dollar,flip").unwrap();
        assert!(svg.contains(">dollar</text>") && svg.contains(">coin</text>"));
        assert!(cloud_svg(&corpus, "Nope", "x").is_err());
        assert!(cloud_svg(&corpus, "Simile", "yen").is_err());
    }
}
