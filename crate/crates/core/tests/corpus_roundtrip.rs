use std::path::Path;

use quotekit::emit::{
    query_corpus, read_jsonl_file, term_frequencies, write_jsonl_file, write_wordcloud_svg, JsonKey,
    QuerySpec,
};
use quotekit::ingest::parse_tsv_str;
use quotekit::{Pipeline, PipelineConfig, Resources};

fn enrich_fixture() -> Vec<quotekit::EnrichedQuote> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    let config = PipelineConfig::load(&dir.join("pipeline.toml")).unwrap();
    let tsv = std::fs::read_to_string(dir.join("paper_examples.tsv")).unwrap();
    Pipeline::from_config(config).unwrap().run(parse_tsv_str(&tsv)).records
}

#[test]
fn file_roundtrip_and_query() {
    let records = enrich_fixture();
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("corpus.jsonl");
    assert_eq!(write_jsonl_file(&corpus, &records).unwrap(), records.len());
    let back = read_jsonl_file(&corpus).unwrap();
    assert!(back.errors.is_empty());
    assert_eq!(back.records, records);

    let q = QuerySpec::parse("Simile", "dollar,euro", None).unwrap();
    let hits = query_corpus(&back.records, &q);
    let ids: Vec<&str> = hits.iter().map(|r| r.id.as_str()).collect();
    assert_eq!(ids, ["P09"]);

    let stop = Resources::bundled().unwrap().stopwords;
    let all: Vec<_> = back.records.iter().collect();
    let table = term_frequencies(&all, JsonKey::Simile, &stop);
    assert_eq!(table.get("dollar"), 1);
    assert_eq!(table.get("like"), 0);
    let svg = dir.path().join("cloud.svg");
    let n = write_wordcloud_svg(&table, &svg).unwrap();
    assert_eq!(std::fs::metadata(&svg).unwrap().len() as usize, n);
}

#[test]
fn annotations_are_substrings_of_the_quote() {
    for r in enrich_fixture() {
        let text = r.text();
        let lower = text.to_lowercase();
        for s in &r.similes {
            assert!(text.contains(&s.text), "{}", s.text);
        }
        for m in &r.metaphors {
            assert!(text.contains(&m.text), "{}", m.text);
        }
        for q in &r.quoted_phrases {
            assert!(text.contains(q.as_str()), "{q}");
        }
        for n in &r.neologisms {
            assert!(lower.contains(n.as_str()), "{n}");
        }
        let chars: Vec<char> = text.chars().collect();
        for e in &r.entities {
            let span: String = chars[e.start..e.char_end()].iter().collect();
            assert_eq!(span, e.surface);
        }
    }
}

#[test]
fn all_scores_pass_with_neg_infinite_threshold() {
    let config = PipelineConfig::from_toml("pmi_threshold = -inf").unwrap();
    let tsv = "A1\tAnn Lee\tCEO\tAcme\tIt was a leap of faith and a test of nerve.\n\
               A2\tBo Li\tCFO\tAcme\tThe price of oil is rising.\n";
    let out = Pipeline::from_config(config).unwrap().run(parse_tsv_str(tsv));
    let of: Vec<&str> = out
        .records
        .iter()
        .flat_map(|r| r.metaphors.iter().filter(|m| m.pmi.is_some()).map(|m| m.text.as_str()))
        .collect();
    assert_eq!(of, ["a leap of faith", "a test of nerve", "The price of oil"]);
}
