//! Pipeline settings, read from a TOML file.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::figurative::PmiVariant;

/// Which duplicate survives deduplication. Only the first is supported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KeepPolicy {
    #[default]
    First,
}

/// Optional overrides for the bundled resource files. Relative paths are
/// resolved against the directory holding the config file.
#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ResourcePaths {
    /// directory of `<code>.profile` files
    pub profiles: Option<PathBuf>,
    pub pos_lexicon: Option<PathBuf>,
    pub pos_suffixes: Option<PathBuf>,
    pub abbreviations: Option<PathBuf>,
    pub taxonomy: Option<PathBuf>,
    /// replaces both bundled word lists
    pub dictionaries: Option<Vec<PathBuf>>,
    pub emotion_lexicon: Option<PathBuf>,
    pub gazetteer: Option<PathBuf>,
    /// merged after the main gazetteer; earlier entries win
    pub extra_gazetteers: Vec<PathBuf>,
    pub name_rules: Option<PathBuf>,
    pub title_rules: Option<PathBuf>,
    pub stopwords: Option<PathBuf>,
}

impl ResourcePaths {
    fn resolve(&mut self, base: &Path) {
        let fix = |p: &mut PathBuf| {
            if p.is_relative() {
                *p = base.join(&*p);
            }
        };
        for p in [
            &mut self.profiles,
            &mut self.pos_lexicon,
            &mut self.pos_suffixes,
            &mut self.abbreviations,
            &mut self.taxonomy,
            &mut self.emotion_lexicon,
            &mut self.gazetteer,
            &mut self.name_rules,
            &mut self.title_rules,
            &mut self.stopwords,
        ]
        .into_iter()
        .flatten()
        {
            fix(p);
        }
        self.dictionaries.iter_mut().flatten().for_each(fix);
        self.extra_gazetteers.iter_mut().for_each(fix);
    }

    fn all(&self) -> Vec<&Path> {
        let singles = [
            &self.profiles,
            &self.pos_lexicon,
            &self.pos_suffixes,
            &self.abbreviations,
            &self.taxonomy,
            &self.emotion_lexicon,
            &self.gazetteer,
            &self.name_rules,
            &self.title_rules,
            &self.stopwords,
        ];
        singles
            .into_iter()
            .flatten()
            .chain(self.dictionaries.iter().flatten())
            .chain(self.extra_gazetteers.iter())
            .map(PathBuf::as_path)
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PipelineConfig {
    pub min_neologism_count: usize,
    /// `-inf` accepts every scored pair
    pub pmi_threshold: f64,
    pub pmi_variant: PmiVariant,
    pub language_allowlist: BTreeSet<String>,
    pub check_shared_hypernyms: bool,
    pub dedup_keep_policy: KeepPolicy,
    pub resources: ResourcePaths,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            min_neologism_count: 3,
            pmi_threshold: 1.0,
            pmi_variant: PmiVariant::Paper,
            language_allowlist: ["en".to_string()].into_iter().collect(),
            check_shared_hypernyms: false,
            dedup_keep_policy: KeepPolicy::First,
            resources: ResourcePaths::default(),
        }
    }
}

impl PipelineConfig {
    /// Parses TOML. Resource paths are left as written.
    pub fn from_toml(text: &str) -> Result<Self> {
        let config: PipelineConfig =
            toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        config.validate()?;
        Ok(config)
    }

    /// Reads a config file, resolving resource paths against its directory
    /// and checking that each exists.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut config = Self::from_toml(&text)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        let base = path.parent().unwrap_or(Path::new("."));
        config.resources.resolve(base);
        config.check_paths()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        if self.min_neologism_count < 1 {
            return Err(Error::Config("min_neologism_count must be at least 1".into()));
        }
        if self.pmi_threshold.is_nan() {
            return Err(Error::Config("pmi_threshold must be a number".into()));
        }
        if self.language_allowlist.is_empty() {
            return Err(Error::Config("language_allowlist is empty".into()));
        }
        Ok(())
    }

    pub fn check_paths(&self) -> Result<()> {
        match self.resources.all().into_iter().find(|p| !p.exists()) {
            Some(missing) => Err(Error::Config(format!(
                "resource not found: {}",
                missing.display()
            ))),
            None => Ok(()),
        }
    }
}
