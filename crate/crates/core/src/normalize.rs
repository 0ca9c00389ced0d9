//! Speaker-name and job-title normalization, transposition repair and
//! majority-vote imputation of missing job titles and affiliations.

use std::collections::{BTreeMap, HashMap, HashSet};

use crate::error::Result;
use crate::model::QuoteRecord;
use crate::rules::{collapse_whitespace, fixed_arity, rule_error};

/// Manual expansions for people known by a single name.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NameRuleTable {
    /// lowercased single token -> title-cased full name
    single_name_map: HashMap<String, String>,
}

impl NameRuleTable {
    pub fn parse(source: &str, text: &str) -> Result<Self> {
        let mut single_name_map = HashMap::new();
        for (line, fields) in fixed_arity(source, text, 2)? {
            let (key, value) = (fields[0], fields[1]);
            if key.split_whitespace().count() != 1 {
                return Err(rule_error(source, line, "name pattern must be a single token"));
            }
            if value.split_whitespace().count() < 2 {
                return Err(rule_error(source, line, "full name needs at least two tokens"));
            }
            single_name_map.insert(key.to_lowercase(), title_case(value));
        }
        Ok(NameRuleTable { single_name_map })
    }

    pub fn insert(&mut self, single: &str, full: &str) {
        self.single_name_map
            .insert(single.trim().to_lowercase(), title_case(full));
    }

    pub fn expand(&self, token: &str) -> Option<&str> {
        self.single_name_map
            .get(&token.to_lowercase())
            .map(String::as_str)
    }
}

/// Manual title -> acronym rules.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TitleRuleTable {
    /// lowercased, whitespace-collapsed phrase -> acronym
    manual_acronym_map: HashMap<String, String>,
}

impl TitleRuleTable {
    pub fn parse(source: &str, text: &str) -> Result<Self> {
        let mut table = TitleRuleTable::default();
        for (line, fields) in fixed_arity(source, text, 2)? {
            table
                .try_insert(fields[0], fields[1])
                .map_err(|m| rule_error(source, line, m))?;
        }
        Ok(table)
    }

    pub fn try_insert(&mut self, phrase: &str, acronym: &str) -> std::result::Result<(), String> {
        let len = acronym.chars().count();
        if !(2..=5).contains(&len)
            || acronym.chars().any(|c| c.is_lowercase() || c.is_whitespace())
            || !acronym.chars().any(char::is_alphabetic)
        {
            return Err(format!("acronym {acronym:?} must be 2-5 uppercase characters"));
        }
        if acronym.eq_ignore_ascii_case("and") {
            return Err("acronym AND collides with the conjunction split".into());
        }
        self.manual_acronym_map
            .insert(key_of(phrase), acronym.to_string());
        Ok(())
    }

    pub fn lookup(&self, title: &str) -> Option<&str> {
        self.manual_acronym_map.get(&key_of(title)).map(String::as_str)
    }
}

fn key_of(text: &str) -> String {
    collapse_whitespace(&text.to_lowercase())
}

/// Upper-cases the first character of every whitespace-separated token and
/// leaves the rest of each token alone. Tokens are rejoined with single spaces.
pub fn title_case(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for token in text.split_whitespace() {
        if !out.is_empty() {
            out.push(' ');
        }
        let mut chars = token.chars();
        if let Some(first) = chars.next() {
            out.extend(first.to_uppercase());
            out.push_str(chars.as_str());
        }
    }
    out
}

/// Majority full name per (lowercased last token, lowercased affiliation),
/// built from multi-token speakers. Keys whose top count is shared by two
/// names are ambiguous and map to nothing.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FullNameIndex {
    names: HashMap<(String, String), String>,
}

impl FullNameIndex {
    pub fn build<'a, I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut counts: HashMap<(String, String), BTreeMap<String, usize>> = HashMap::new();
        for (speaker, affiliation) in pairs {
            let affiliation = key_of(affiliation);
            if affiliation.is_empty() {
                continue;
            }
            let name = title_case(speaker);
            let tokens: Vec<&str> = name.split(' ').collect();
            if tokens.len() < 2 {
                continue;
            }
            let last = tokens[tokens.len() - 1];
            *counts
                .entry((last.to_lowercase(), affiliation))
                .or_default()
                .entry(name.clone())
                .or_default() += 1;
        }
        let names = counts
            .into_iter()
            .filter_map(|(key, tally)| unique_mode(&tally).map(|n| (key, n.to_string())))
            .collect();
        FullNameIndex { names }
    }

    pub fn lookup(&self, token: &str, affiliation: &str) -> Option<&str> {
        self.names
            .get(&(token.to_lowercase(), key_of(affiliation)))
            .map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }
}

fn unique_mode(tally: &BTreeMap<String, usize>) -> Option<&str> {
    let max = *tally.values().max()?;
    let mut top = tally.iter().filter(|(_, &c)| c == max);
    let first = top.next()?;
    if top.next().is_some() {
        None
    } else {
        Some(first.0)
    }
}

/// Modal value with ties broken by ascending byte order. `BTreeMap<String, _>`
/// iterates in byte order, so the first maximum wins.
fn mode_by_bytes(tally: &BTreeMap<String, usize>) -> Option<&str> {
    let mut best: Option<(&str, usize)> = None;
    for (value, &count) in tally {
        if best.is_none_or(|(_, c)| count > c) {
            best = Some((value, count));
        }
    }
    best.map(|(v, _)| v)
}

pub fn normalize_name(
    speaker: &str,
    affiliation: &str,
    rules: &NameRuleTable,
    index: &FullNameIndex,
) -> String {
    let name = title_case(speaker);
    if name.contains(' ') || name.is_empty() {
        return name;
    }
    if let Some(full) = rules.expand(&name) {
        return full.to_string();
    }
    if !affiliation.trim().is_empty() {
        if let Some(full) = index.lookup(&name, affiliation) {
            return full.to_string();
        }
    }
    name
}

/// Keeps the part before the first `and`, then applies the manual acronym
/// table, then the `Chief X Y` initialism rule, and otherwise title-cases.
pub fn normalize_job_title(title: &str, rules: &TitleRuleTable) -> String {
    let tokens: Vec<&str> = title
        .split_whitespace()
        .take_while(|t| t.to_lowercase() != "and")
        .collect();
    if tokens.is_empty() {
        return String::new();
    }
    let left = tokens.join(" ");
    if let Some(acronym) = rules.lookup(&left) {
        return acronym.to_string();
    }
    if tokens.len() == 3 && tokens[0].to_lowercase() == "chief" {
        return tokens
            .iter()
            .filter_map(|t| t.chars().next())
            .flat_map(char::to_uppercase)
            .collect();
    }
    title_case(&left)
}

/// Distinct non-empty job titles, trimmed and lowercased.
pub fn build_title_vocabulary(records: &[QuoteRecord]) -> HashSet<String> {
    records
        .iter()
        .map(|r| key_of(&r.job_title))
        .filter(|t| !t.is_empty())
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Transposition {
    Unchanged,
    /// affiliation moved into the empty job title
    Moved,
    /// affiliation was a title but the job title was already set
    Cleared,
}

pub fn fix_transposition(record: &mut QuoteRecord, title_vocab: &HashSet<String>) -> Transposition {
    let affiliation = key_of(&record.affiliation);
    if affiliation.is_empty() || !title_vocab.contains(&affiliation) {
        return Transposition::Unchanged;
    }
    if record.job_title.trim().is_empty() {
        record.job_title = std::mem::take(&mut record.affiliation);
        Transposition::Moved
    } else {
        log::debug!(
            "{}: clearing affiliation {:?} (job title {:?} already set)",
            record.id,
            record.affiliation,
            record.job_title
        );
        record.affiliation.clear();
        Transposition::Cleared
    }
}

/// Multisets of observed attribute values keyed by the other two attributes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ImputationIndex {
    pub by_name_affiliation: HashMap<(String, String), BTreeMap<String, usize>>,
    pub by_name_title: HashMap<(String, String), BTreeMap<String, usize>>,
}

pub fn build_imputation_index(records: &[QuoteRecord]) -> ImputationIndex {
    let mut idx = ImputationIndex::default();
    for r in records {
        if r.speaker.is_empty() {
            continue;
        }
        if !r.affiliation.is_empty() && !r.job_title.is_empty() {
            *idx.by_name_affiliation
                .entry((r.speaker.clone(), r.affiliation.clone()))
                .or_default()
                .entry(r.job_title.clone())
                .or_default() += 1;
            *idx.by_name_title
                .entry((r.speaker.clone(), r.job_title.clone()))
                .or_default()
                .entry(r.affiliation.clone())
                .or_default() += 1;
        }
    }
    idx
}

pub fn impute_job_title(record: &mut QuoteRecord, idx: &ImputationIndex) -> bool {
    if !record.job_title.is_empty() || record.affiliation.is_empty() {
        return false;
    }
    let key = (record.speaker.clone(), record.affiliation.clone());
    match idx.by_name_affiliation.get(&key).and_then(mode_by_bytes) {
        Some(title) => {
            record.job_title = title.to_string();
            record.imputed_job_title = true;
            true
        }
        None => false,
    }
}

pub fn impute_affiliation(record: &mut QuoteRecord, idx: &ImputationIndex) -> bool {
    if !record.affiliation.is_empty() || record.job_title.is_empty() {
        return false;
    }
    let key = (record.speaker.clone(), record.job_title.clone());
    match idx.by_name_title.get(&key).and_then(mode_by_bytes) {
        Some(affiliation) => {
            record.affiliation = affiliation.to_string();
            record.imputed_affiliation = true;
            true
        }
        None => false,
    }
}

/// One imputation round over the whole record set, using an index built
/// from the set before any value is filled in.
pub fn impute_all(records: &mut [QuoteRecord]) -> (usize, usize) {
    let idx = build_imputation_index(records);
    let mut titles = 0;
    let mut affiliations = 0;
    for r in records.iter_mut() {
        if impute_job_title(r, &idx) {
            titles += 1;
        } else if impute_affiliation(r, &idx) {
            affiliations += 1;
        }
    }
    (titles, affiliations)
}
