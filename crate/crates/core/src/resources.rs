//! Lexicons, rule tables and profiles, either bundled or loaded from disk.

use std::path::Path;

use crate::affect::{EmotionLexicon, Gazetteer};
use crate::config::ResourcePaths;
use crate::emit::Stopwords;
use crate::error::{Error, Result};
use crate::figurative::Dictionary;
use crate::ingest::LanguageProfile;
use crate::lingpipe::{Abbreviations, PosLexicon, TaxonomyStore};
use crate::normalize::{NameRuleTable, TitleRuleTable};

const PROFILES: [(&str, &str); 4] = [
    ("de", include_str!("../data/profiles/de.profile")),
    ("en", include_str!("../data/profiles/en.profile")),
    ("es", include_str!("../data/profiles/es.profile")),
    ("fr", include_str!("../data/profiles/fr.profile")),
];
const POS_LEXICON: &str = include_str!("../data/pos_lexicon.tsv");
const POS_SUFFIXES: &str = include_str!("../data/pos_suffix.tsv");
const ABBREVIATIONS: &str = include_str!("../data/abbreviations.txt");
const TAXONOMY: &str = include_str!("../data/taxonomy.tsv");
const DICT_US: &str = include_str!("../data/en_us.dict");
const DICT_UK: &str = include_str!("../data/en_uk.dict");
const EMOTION_LEXICON: &str = include_str!("../data/emotion_lexicon.tsv");
const GAZETTEER: &str = include_str!("../data/gazetteer.tsv");
const NAME_RULES: &str = include_str!("../data/name_rules.tsv");
const TITLE_RULES: &str = include_str!("../data/title_rules.tsv");
const STOPWORDS: &str = include_str!("../data/stopwords.txt");

pub fn bundled_profiles() -> Result<Vec<LanguageProfile>> {
    PROFILES
        .iter()
        .map(|(code, text)| LanguageProfile::parse(*code, text))
        .collect()
}

#[derive(Debug, Clone)]
pub struct Resources {
    pub profiles: Vec<LanguageProfile>,
    pub lexicon: PosLexicon,
    pub abbreviations: Abbreviations,
    pub taxonomy: TaxonomyStore,
    pub dictionary: Dictionary,
    pub emotion: EmotionLexicon,
    pub gazetteer: Gazetteer,
    pub name_rules: NameRuleTable,
    pub title_rules: TitleRuleTable,
    pub stopwords: Stopwords,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

/// Text of an override file, or the bundled text with its pseudo-path.
fn source(path: &Option<std::path::PathBuf>, bundled: &'static str, name: &str) -> Result<(String, String)> {
    match path {
        Some(p) => Ok((p.display().to_string(), read(p)?)),
        None => Ok((format!("<bundled>/{name}"), bundled.to_string())),
    }
}

impl Resources {
    pub fn bundled() -> Result<Self> {
        Self::load(&ResourcePaths::default())
    }

    /// Loads each resource from its override path when set, else the bundled
    /// copy. Paths should already be resolved.
    pub fn load(paths: &ResourcePaths) -> Result<Self> {
        let profiles = match &paths.profiles {
            Some(dir) => LanguageProfile::load_dir(dir)?,
            None => bundled_profiles()?,
        };

        let (lex_src, lex) = source(&paths.pos_lexicon, POS_LEXICON, "pos_lexicon.tsv")?;
        let (suf_src, suf) = source(&paths.pos_suffixes, POS_SUFFIXES, "pos_suffix.tsv")?;
        let lexicon = PosLexicon::parse(&lex_src, &lex, &suf_src, &suf)?;

        let (_, abbrevs) = source(&paths.abbreviations, ABBREVIATIONS, "abbreviations.txt")?;
        let (tax_src, tax) = source(&paths.taxonomy, TAXONOMY, "taxonomy.tsv")?;
        let taxonomy = TaxonomyStore::parse(&tax_src, &tax)?;

        let dictionary = match &paths.dictionaries {
            Some(files) => {
                let texts = files.iter().map(|p| read(p)).collect::<Result<Vec<_>>>()?;
                let refs: Vec<&str> = texts.iter().map(String::as_str).collect();
                Dictionary::parse(&refs)
            }
            None => Dictionary::parse(&[DICT_US, DICT_UK]),
        };

        let (emo_src, emo) = source(&paths.emotion_lexicon, EMOTION_LEXICON, "emotion_lexicon.tsv")?;
        let emotion = EmotionLexicon::parse(&emo_src, &emo)?;

        let (gaz_src, gaz) = source(&paths.gazetteer, GAZETTEER, "gazetteer.tsv")?;
        let mut gazetteer = Gazetteer::parse(&gaz_src, &gaz)?;
        for extra in &paths.extra_gazetteers {
            let g = Gazetteer::parse(&extra.display().to_string(), &read(extra)?)?;
            gazetteer.extend(&g);
        }

        let (name_src, names) = source(&paths.name_rules, NAME_RULES, "name_rules.tsv")?;
        let (title_src, titles) = source(&paths.title_rules, TITLE_RULES, "title_rules.tsv")?;
        let (_, stop) = source(&paths.stopwords, STOPWORDS, "stopwords.txt")?;

        Ok(Resources {
            profiles,
            lexicon,
            abbreviations: Abbreviations::parse(&abbrevs),
            taxonomy,
            dictionary,
            emotion,
            gazetteer,
            name_rules: NameRuleTable::parse(&name_src, &names)?,
            title_rules: TitleRuleTable::parse(&title_src, &titles)?,
            stopwords: Stopwords::parse(&stop),
        })
    }
}
