//! The full enrichment run: cleaning, filtering, normalization, imputation
//! and the two annotation passes.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::{self, Write as _};
use std::path::Path;

use crate::affect::{extract_entities, score_emotions, EmotionLabel, EntityClass, Gazetteer};
use crate::config::PipelineConfig;
use crate::error::{Error, Result};
use crate::figurative::{
    detect_neologisms, extract_highlighted, extract_isa_metaphors, extract_of_metaphors,
    extract_similes, harvest_np_of_np, IsAFilter, NeologismContext, PmiTable, WordFrequencies,
};
use crate::ingest::{clean_quote, dedupe, filter_non_english, TsvParse};
use crate::lingpipe::AnalyzedQuote;
use crate::model::{validate_record, EnrichedQuote, QuoteRecord, RawQuoteRecord};
use crate::normalize::{
    build_title_vocabulary, fix_transposition, impute_all, normalize_job_title, normalize_name,
    FullNameIndex, Transposition,
};
use crate::resources::Resources;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Stage {
    Parse,
    Clean,
    Language,
    Names,
    Dedupe,
    Titles,
    Impute,
    Annotate,
}

impl Stage {
    pub fn as_str(self) -> &'static str {
        match self {
            Stage::Parse => "parse",
            Stage::Clean => "clean",
            Stage::Language => "language",
            Stage::Names => "names",
            Stage::Dedupe => "dedupe",
            Stage::Titles => "titles",
            Stage::Impute => "impute",
            Stage::Annotate => "annotate",
        }
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Record count and blank attribute counts after a stage.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct StageSnapshot {
    pub records: usize,
    pub blank_job_title: usize,
    pub blank_affiliation: usize,
}

impl StageSnapshot {
    pub fn of(records: &[QuoteRecord]) -> Self {
        StageSnapshot {
            records: records.len(),
            blank_job_title: records.iter().filter(|r| r.job_title.trim().is_empty()).count(),
            blank_affiliation: records.iter().filter(|r| r.affiliation.trim().is_empty()).count(),
        }
    }

    fn of_raw(records: &[RawQuoteRecord]) -> Self {
        StageSnapshot {
            records: records.len(),
            blank_job_title: records.iter().filter(|r| r.job_title.trim().is_empty()).count(),
            blank_affiliation: records.iter().filter(|r| r.affiliation.trim().is_empty()).count(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct PipelineStats {
    pub snapshots: Vec<(Stage, StageSnapshot)>,
    /// extra per-stage metrics in emission order
    pub metrics: Vec<(Stage, String, String)>,
}

impl PipelineStats {
    fn snapshot(&mut self, stage: Stage, snap: StageSnapshot) {
        self.snapshots.push((stage, snap));
    }

    fn metric(&mut self, stage: Stage, name: impl Into<String>, value: impl ToString) {
        self.metrics.push((stage, name.into(), value.to_string()));
    }

    pub fn get(&self, stage: Stage) -> Option<StageSnapshot> {
        self.snapshots.iter().find(|(s, _)| *s == stage).map(|(_, v)| *v)
    }

    pub fn metric_value(&self, stage: Stage, name: &str) -> Option<&str> {
        self.metrics
            .iter()
            .find(|(s, n, _)| *s == stage && n == name)
            .map(|(_, _, v)| v.as_str())
    }

    /// `stage TAB metric TAB value` lines.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        let stages: Vec<Stage> = {
            let mut seen = Vec::new();
            for s in self.snapshots.iter().map(|x| x.0).chain(self.metrics.iter().map(|x| x.0)) {
                if !seen.contains(&s) {
                    seen.push(s);
                }
            }
            seen.sort();
            seen
        };
        for stage in stages {
            if let Some(snap) = self.get(stage) {
                let _ = writeln!(out, "{stage}\trecords\t{}", snap.records);
                let _ = writeln!(out, "{stage}\tblank_job_title\t{}", snap.blank_job_title);
                let _ = writeln!(out, "{stage}\tblank_affiliation\t{}", snap.blank_affiliation);
            }
            for (_, name, value) in self.metrics.iter().filter(|m| m.0 == stage) {
                let _ = writeln!(out, "{stage}\t{name}\t{value}");
            }
        }
        out
    }

    pub fn write_tsv(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_tsv()).map_err(|e| Error::io(path, e))
    }
}

#[derive(Debug, Clone)]
pub struct PipelineOutput {
    pub records: Vec<EnrichedQuote>,
    pub stats: PipelineStats,
}

fn blank_reduction(before: usize, after: usize) -> String {
    if before == 0 {
        "0.00".into()
    } else {
        format!("{:.2}", (before - after.min(before)) as f64 * 100.0 / before as f64)
    }
}

fn top_values<'a>(values: impl Iterator<Item = &'a str>, n: usize) -> Vec<(&'a str, usize)> {
    let mut counts: HashMap<&str, usize> = HashMap::new();
    for v in values.filter(|v| !v.trim().is_empty()) {
        *counts.entry(v).or_default() += 1;
    }
    let mut all: Vec<_> = counts.into_iter().collect();
    all.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));
    all.truncate(n);
    all
}

pub struct Pipeline {
    pub config: PipelineConfig,
    pub resources: Resources,
}

impl Pipeline {
    pub fn new(config: PipelineConfig, resources: Resources) -> Self {
        Pipeline { config, resources }
    }

    /// Loads resources named by the config, falling back to bundled data.
    pub fn from_config(config: PipelineConfig) -> Result<Self> {
        config.validate()?;
        let resources = Resources::load(&config.resources)?;
        Ok(Pipeline { config, resources })
    }

    pub fn run(&self, parsed: TsvParse) -> PipelineOutput {
        let mut stats = PipelineStats::default();
        stats.snapshot(Stage::Parse, StageSnapshot::of_raw(&parsed.records));
        stats.metric(Stage::Parse, "malformed_rows", parsed.malformed.len());
        for row in &parsed.malformed {
            log::warn!("line {}: expected 4 or 5 fields, found {}", row.line, row.field_count);
        }
        let records = self.prepare(parsed.records, &mut stats);
        let records = self.annotate(&records, &mut stats);
        PipelineOutput { records, stats }
    }

    /// Every stage up to and including imputation.
    pub fn prepare(&self, raw: Vec<RawQuoteRecord>, stats: &mut PipelineStats) -> Vec<QuoteRecord> {
        let records = clean_records(raw, stats);
        stats.snapshot(Stage::Clean, StageSnapshot::of(&records));

        let (records, dropped) = filter_non_english(
            records,
            &self.resources.profiles,
            &self.config.language_allowlist,
        );
        stats.metric(Stage::Language, "dropped", dropped);
        stats.snapshot(Stage::Language, StageSnapshot::of(&records));

        let records = self.normalize_names(records, stats);
        stats.snapshot(Stage::Names, StageSnapshot::of(&records));

        let (mut records, removed) = dedupe(records);
        stats.metric(Stage::Dedupe, "removed", removed);
        stats.snapshot(Stage::Dedupe, StageSnapshot::of(&records));

        self.normalize_titles(&mut records, stats);
        stats.snapshot(Stage::Titles, StageSnapshot::of(&records));

        let before = StageSnapshot::of(&records);
        let (titles, affiliations) = impute_all(&mut records);
        let after = StageSnapshot::of(&records);
        stats.metric(Stage::Impute, "imputed_job_title", titles);
        stats.metric(Stage::Impute, "imputed_affiliation", affiliations);
        stats.metric(
            Stage::Impute,
            "blank_job_title_reduction_pct",
            blank_reduction(before.blank_job_title, after.blank_job_title),
        );
        stats.metric(
            Stage::Impute,
            "blank_affiliation_reduction_pct",
            blank_reduction(before.blank_affiliation, after.blank_affiliation),
        );
        stats.snapshot(Stage::Impute, after);
        records
    }

    fn normalize_names(&self, mut records: Vec<QuoteRecord>, stats: &mut PipelineStats) -> Vec<QuoteRecord> {
        let index = FullNameIndex::build(
            records.iter().map(|r| (r.speaker.as_str(), r.affiliation.as_str())),
        );
        let mut changed = 0;
        for r in &mut records {
            let name = normalize_name(&r.speaker, &r.affiliation, &self.resources.name_rules, &index);
            if name != r.speaker {
                changed += 1;
                r.speaker = name;
            }
        }
        stats.metric(Stage::Names, "changed", changed);
        records
    }

    fn normalize_titles(&self, records: &mut [QuoteRecord], stats: &mut PipelineStats) {
        let vocabulary = build_title_vocabulary(records);
        let (mut moved, mut cleared, mut changed) = (0, 0, 0);
        for r in records.iter_mut() {
            match fix_transposition(r, &vocabulary) {
                Transposition::Moved => moved += 1,
                Transposition::Cleared => cleared += 1,
                Transposition::Unchanged => {}
            }
            let title = normalize_job_title(&r.job_title, &self.resources.title_rules);
            if title != r.job_title {
                changed += 1;
                r.job_title = title;
            }
        }
        stats.metric(Stage::Titles, "vocabulary", vocabulary.len());
        stats.metric(Stage::Titles, "transposition_moved", moved);
        stats.metric(Stage::Titles, "transposition_cleared", cleared);
        stats.metric(Stage::Titles, "changed", changed);
    }

    /// Gazetteer seeded with every speaker (PERSON) and affiliation (ORG),
    /// without overriding configured entries.
    pub fn corpus_gazetteer(&self, records: &[QuoteRecord]) -> Gazetteer {
        let mut g = self.resources.gazetteer.clone();
        for r in records {
            g.insert(&r.speaker, EntityClass::Person);
        }
        for r in records {
            g.insert(&r.affiliation, EntityClass::Org);
        }
        g
    }

    /// Corpus-wide pass (word counts, PMI table, gazetteer), then per-record
    /// extraction.
    pub fn annotate(&self, records: &[QuoteRecord], stats: &mut PipelineStats) -> Vec<EnrichedQuote> {
        let res = &self.resources;
        let analyzed: Vec<AnalyzedQuote> = records
            .iter()
            .map(|r| AnalyzedQuote::new(&r.quote, &res.abbreviations, &res.lexicon))
            .collect();

        let mut frequencies = WordFrequencies::default();
        let mut pmi = PmiTable::default();
        for a in &analyzed {
            frequencies.add_tokens(&a.tokens);
            pmi.merge(harvest_np_of_np(a.sentence_token_slices().map(|s| (s, a.text.as_str()))));
        }
        let gazetteer = self.corpus_gazetteer(records);
        stats.metric(Stage::Annotate, "np_of_np_pairs", pmi.total_pairs());
        stats.metric(Stage::Annotate, "gazetteer_phrases", gazetteer.len());

        let corpus = Corpus {
            frequencies,
            pmi,
            gazetteer,
        };
        let out: Vec<EnrichedQuote> = records
            .iter()
            .zip(&analyzed)
            .map(|(r, a)| self.enrich_one(r, a, &corpus))
            .collect();

        let count = |f: fn(&EnrichedQuote) -> usize| out.iter().map(f).sum::<usize>();
        stats.metric(Stage::Annotate, "neologisms", count(|q| q.neologisms.len()));
        stats.metric(Stage::Annotate, "quoted_phrases", count(|q| q.quoted_phrases.len()));
        stats.metric(Stage::Annotate, "similes", count(|q| q.similes.len()));
        stats.metric(Stage::Annotate, "metaphors", count(|q| q.metaphors.len()));
        stats.metric(Stage::Annotate, "entities", count(|q| q.entities.len()));
        let mut labels: BTreeMap<&str, usize> = BTreeMap::new();
        for q in &out {
            *labels.entry(q.emotion.label.as_str()).or_default() += 1;
        }
        for label in [
            EmotionLabel::Anger,
            EmotionLabel::Fear,
            EmotionLabel::Joy,
            EmotionLabel::Sadness,
            EmotionLabel::None,
        ] {
            let n = labels.get(label.as_str()).copied().unwrap_or(0);
            stats.metric(Stage::Annotate, format!("emotion_{label}"), n);
        }
        for (field, values) in [
            ("speaker", out.iter().map(|q| q.speaker.as_str()).collect::<Vec<_>>()),
            ("job_title", out.iter().map(|q| q.job_title.as_str()).collect()),
            ("affiliation", out.iter().map(|q| q.affiliation.as_str()).collect()),
        ] {
            for (rank, (value, n)) in top_values(values.into_iter(), 3).into_iter().enumerate() {
                stats.metric(Stage::Annotate, format!("top_{field}_{}:{value}", rank + 1), n);
            }
        }
        out
    }

    fn enrich_one(&self, record: &QuoteRecord, a: &AnalyzedQuote, corpus: &Corpus) -> EnrichedQuote {
        let res = &self.resources;
        let text = a.text.as_str();
        let entities = extract_entities(text, &corpus.gazetteer);
        let ctx = NeologismContext {
            dictionary: &res.dictionary,
            frequencies: &corpus.frequencies,
            min_count: self.config.min_neologism_count,
        };
        let neologisms = detect_neologisms(&a.tokens, record, &entities, &ctx);
        let filter = IsAFilter {
            reject_shared_hypernyms: self.config.check_shared_hypernyms,
        };
        let mut similes = Vec::new();
        let mut metaphors = Vec::new();
        for sentence in a.sentence_token_slices() {
            similes.extend(extract_similes(sentence, text));
            metaphors.extend(extract_isa_metaphors(sentence, text, &res.taxonomy, filter));
            metaphors.extend(extract_of_metaphors(
                sentence,
                text,
                &corpus.pmi,
                self.config.pmi_variant,
                self.config.pmi_threshold,
            ));
        }
        EnrichedQuote {
            id: record.id.clone(),
            speaker: record.speaker.clone(),
            job_title: record.job_title.clone(),
            affiliation: record.affiliation.clone(),
            sentences: a.sentence_strings(),
            neologisms,
            quoted_phrases: extract_highlighted(text),
            similes,
            metaphors,
            emotion: score_emotions(&a.tokens, &res.emotion),
            entities,
        }
    }
}

struct Corpus {
    frequencies: WordFrequencies,
    pmi: PmiTable,
    gazetteer: Gazetteer,
}

/// HTML-cleans every field and drops rows left without an id, speaker or quote.
fn clean_records(raw: Vec<RawQuoteRecord>, stats: &mut PipelineStats) -> Vec<QuoteRecord> {
    let mut ids = HashSet::new();
    let mut duplicate_ids = 0;
    let mut dropped: BTreeMap<&'static str, usize> = BTreeMap::new();
    let mut out = Vec::with_capacity(raw.len());
    for r in raw {
        let cleaned = RawQuoteRecord {
            id: r.id.trim().to_string(),
            speaker: clean_quote(&r.speaker),
            job_title: clean_quote(&r.job_title),
            affiliation: clean_quote(&r.affiliation),
            quote: clean_quote(&r.quote),
        };
        let violations = validate_record(&cleaned);
        if let Some(first) = violations.first() {
            log::debug!("dropping row {:?}: {first}", cleaned.id);
            *dropped.entry(first.as_str()).or_default() += 1;
            continue;
        }
        if !ids.insert(cleaned.id.clone()) {
            log::warn!("duplicate id {:?}", cleaned.id);
            duplicate_ids += 1;
        }
        out.push(QuoteRecord {
            id: cleaned.id,
            speaker: cleaned.speaker,
            job_title: cleaned.job_title,
            affiliation: cleaned.affiliation,
            quote: cleaned.quote,
            imputed_job_title: false,
            imputed_affiliation: false,
        });
    }
    for name in ["id_empty", "speaker_empty", "quote_empty"] {
        stats.metric(Stage::Clean, format!("dropped_{name}"), dropped.get(name).copied().unwrap_or(0));
    }
    stats.metric(Stage::Clean, "duplicate_ids", duplicate_ids);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ingest::parse_tsv_str;

    fn pipeline() -> Pipeline {
        Pipeline::from_config(PipelineConfig::default()).unwrap()
    }

    #[test]
    fn runs_end_to_end() {
        let tsv = "Q1\tbarack obama\t\tWhite House\tThe economy is &lt;b&gt;strong&lt;/b&gt;. It is a currency like the dollar.\n\
                   Q2\tObama\tPresident\tWhite House\tThe economy grows every single quarter now.\n\
                   Q3\tBarack Obama\tPresident\tWhite House\tThe economy grows every single quarter now.\n\
                   bad row\n";
        let out = pipeline().run(parse_tsv_str(tsv));
        assert_eq!(out.records.len(), 2);
        let q1 = &out.records[0];
        assert_eq!(q1.speaker, "Barack Obama");
        assert_eq!(q1.job_title, "President");
        assert_eq!(q1.sentences, ["The economy is strong.", "It is a currency like the dollar."]);
        assert_eq!(q1.similes.len(), 1);
        assert_eq!(out.stats.metric_value(Stage::Parse, "malformed_rows"), Some("1"));
        assert_eq!(out.stats.metric_value(Stage::Dedupe, "removed"), Some("1"));
        assert_eq!(out.stats.metric_value(Stage::Impute, "imputed_job_title"), Some("1"));
    }

    #[test]
    fn stats_tsv_has_three_columns() {
        let out = pipeline().run(parse_tsv_str("Q1\tA B\tCEO\tAcme\tHello there, everyone.\n"));
        let tsv = out.stats.to_tsv();
        assert!(tsv.starts_with("parse\trecords\t1\n"));
        for line in tsv.lines() {
            assert_eq!(line.split('\t').count(), 3, "{line}");
        }
        assert!(tsv.contains("annotate\ttop_speaker_1:A B\t1\n"));
    }

    #[test]
    fn empty_rows_are_dropped() {
        let tsv = "Q1\tA\tAcme\t<br>\nQ2\t\tAcme\tText\nQ3\tB\tAcme\tText\n";
        let out = pipeline().run(parse_tsv_str(tsv));
        assert_eq!(out.records.len(), 1);
        assert_eq!(out.stats.metric_value(Stage::Clean, "dropped_quote_empty"), Some("1"));
        assert_eq!(out.stats.metric_value(Stage::Clean, "dropped_speaker_empty"), Some("1"));
    }

    #[test]
    fn reduction_percentages() {
        assert_eq!(blank_reduction(0, 0), "0.00");
        assert_eq!(blank_reduction(4, 1), "75.00");
    }
}
