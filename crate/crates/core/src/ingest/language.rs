//! Rank-order character n-gram language identification.
//!
//! Each language is described by its 300 most frequent character 1- to
//! 3-grams. Words are lowercased and padded with `_` so that word-initial and
//! word-final n-grams are distinguished from interior ones. A text is assigned
//! the language whose ranking is closest to its own ("out-of-place" distance).

use std::collections::HashMap;
use std::path::Path;

use crate::error::{Error, Result};

pub const PROFILE_CAP: usize = 300;
pub const MIN_LETTERS: usize = 20;
pub const UNDETERMINED: &str = "und";
const MAX_N: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LanguageProfile {
    code: String,
    /// n-grams in rank order; index = rank
    ngrams: Vec<String>,
    ranks: HashMap<String, usize>,
}

impl LanguageProfile {
    pub fn new(code: impl Into<String>, ngrams: Vec<String>) -> Result<Self> {
        let code = code.into();
        let mut ranks = HashMap::with_capacity(ngrams.len());
        for (rank, gram) in ngrams.iter().enumerate() {
            let len = gram.chars().count();
            if len == 0 || len > MAX_N || gram.to_lowercase() != *gram {
                return Err(Error::Config(format!(
                    "profile {code}: invalid n-gram {gram:?} at rank {rank}"
                )));
            }
            if ranks.insert(gram.clone(), rank).is_some() {
                return Err(Error::Config(format!(
                    "profile {code}: duplicate n-gram {gram:?}"
                )));
            }
        }
        if ngrams.len() > PROFILE_CAP {
            return Err(Error::Config(format!(
                "profile {code}: {} entries exceeds cap {PROFILE_CAP}",
                ngrams.len()
            )));
        }
        Ok(LanguageProfile {
            code,
            ngrams,
            ranks,
        })
    }

    /// Builds a capped profile from sample text.
    pub fn from_text(code: impl Into<String>, text: &str) -> Self {
        let ngrams = ranked_ngrams(text, PROFILE_CAP);
        let ranks = ngrams
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), i))
            .collect();
        LanguageProfile {
            code: code.into(),
            ngrams,
            ranks,
        }
    }

    /// Parses the `.profile` file format: one n-gram per line in rank order.
    pub fn parse(code: impl Into<String>, text: &str) -> Result<Self> {
        let ngrams = text
            .lines()
            .map(|l| l.strip_suffix('\r').unwrap_or(l))
            .filter(|l| !l.is_empty())
            .map(str::to_string)
            .collect();
        Self::new(code, ngrams)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let code = path
            .file_stem()
            .and_then(|s| s.to_str())
            .ok_or_else(|| Error::Config(format!("bad profile filename {}", path.display())))?;
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(code, &text)
    }

    /// Loads every `*.profile` file in a directory.
    pub fn load_dir(dir: &Path) -> Result<Vec<Self>> {
        let entries = std::fs::read_dir(dir).map_err(|e| Error::io(dir, e))?;
        let mut profiles = Vec::new();
        for entry in entries {
            let path = entry.map_err(|e| Error::io(dir, e))?.path();
            if path.extension().and_then(|e| e.to_str()) == Some("profile") {
                profiles.push(Self::load(&path)?);
            }
        }
        if profiles.is_empty() {
            return Err(Error::Config(format!(
                "no .profile files in {}",
                dir.display()
            )));
        }
        profiles.sort_by(|a, b| a.code.cmp(&b.code));
        Ok(profiles)
    }

    pub fn code(&self) -> &str {
        &self.code
    }

    pub fn ngrams(&self) -> &[String] {
        &self.ngrams
    }

    pub fn rank(&self, ngram: &str) -> Option<usize> {
        self.ranks.get(ngram).copied()
    }

    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        for gram in &self.ngrams {
            out.push_str(gram);
            out.push('\n');
        }
        out
    }

    /// Out-of-place distance from a document ranking to this profile.
    fn distance(&self, doc: &[String]) -> usize {
        doc.iter()
            .enumerate()
            .map(|(rank, gram)| match self.rank(gram) {
                Some(r) => rank.abs_diff(r),
                None => PROFILE_CAP,
            })
            .sum()
    }
}

/// Counts padded 1..3-grams and returns the top `cap` by (count desc, n-gram asc).
fn ranked_ngrams(text: &str, cap: usize) -> Vec<String> {
    let mut counts: HashMap<String, usize> = HashMap::new();
    let lower = text.to_lowercase();
    for word in lower.split(|c: char| !c.is_alphabetic()).filter(|w| !w.is_empty()) {
        let padded: Vec<char> = std::iter::once('_')
            .chain(word.chars())
            .chain(std::iter::once('_'))
            .collect();
        for n in 1..=MAX_N {
            for window in padded.windows(n) {
                if n == 1 && window[0] == '_' {
                    continue;
                }
                *counts.entry(window.iter().collect()).or_default() += 1;
            }
        }
    }
    let mut ranked: Vec<(String, usize)> = counts.into_iter().collect();
    ranked.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    ranked.truncate(cap);
    ranked.into_iter().map(|(g, _)| g).collect()
}

/// Returns the closest profile's code, or `"und"` for texts with fewer than
/// 20 letters. Distance ties go to the alphabetically first code.
pub fn detect_language<'p>(text: &str, profiles: &'p [LanguageProfile]) -> &'p str {
    if text.chars().filter(|c| c.is_alphabetic()).count() < MIN_LETTERS {
        return UNDETERMINED;
    }
    let doc = ranked_ngrams(text, PROFILE_CAP);
    profiles
        .iter()
        .map(|p| (p.distance(&doc), p.code()))
        .min()
        .map(|(_, code)| code)
        .unwrap_or(UNDETERMINED)
}
