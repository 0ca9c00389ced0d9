//! Reading raw rows, cleaning quote text, language filtering and duplicate removal.

mod html;
mod language;
mod tsv;

use std::collections::{BTreeSet, HashSet};

pub use html::{clean_quote, strip_html, unescape_html};
pub use language::{detect_language, LanguageProfile, MIN_LETTERS, PROFILE_CAP, UNDETERMINED};
pub use tsv::{parse_tsv, parse_tsv_str, MalformedRow, TsvParse};

use crate::model::QuoteRecord;

/// Keeps records whose detected language is allowlisted. Quotes too short
/// to classify (`"und"`) are kept. Returns the kept records and the number
/// dropped.
pub fn filter_non_english(
    records: Vec<QuoteRecord>,
    profiles: &[LanguageProfile],
    allowlist: &BTreeSet<String>,
) -> (Vec<QuoteRecord>, usize) {
    let before = records.len();
    let kept: Vec<QuoteRecord> = records
        .into_iter()
        .filter(|r| {
            let code = detect_language(&r.quote, profiles);
            let keep = code == UNDETERMINED || allowlist.contains(code);
            if !keep {
                log::debug!("dropping {} detected as {code}", r.id);
            }
            keep
        })
        .collect();
    let dropped = before - kept.len();
    (kept, dropped)
}

/// Drops every record whose (speaker, quote) fingerprint was already seen,
/// keeping the first occurrence.
pub fn dedupe(records: Vec<QuoteRecord>) -> (Vec<QuoteRecord>, usize) {
    let before = records.len();
    let mut seen = HashSet::with_capacity(records.len());
    let kept: Vec<QuoteRecord> = records
        .into_iter()
        .filter(|r| seen.insert(r.fingerprint()))
        .collect();
    let removed = before - kept.len();
    (kept, removed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rec(id: &str, speaker: &str, quote: &str) -> QuoteRecord {
        QuoteRecord {
            id: id.into(),
            speaker: speaker.into(),
            quote: quote.into(),
            ..Default::default()
        }
    }

    #[test]
    fn identical_fuld_records_collapse() {
        let q = "You know what, let them line up; I can handle it.";
        let (kept, removed) = dedupe(vec![rec("1", "Dick Fuld", q), rec("2", "Dick Fuld", q)]);
        assert_eq!(removed, 1);
        assert_eq!(kept.len(), 1);
        assert_eq!(kept[0].id, "1");
    }

    #[test]
    fn distinct_quotes_or_speakers_survive() {
        let (kept, removed) = dedupe(vec![rec("1", "A", "x"), rec("2", "A", "y")]);
        assert_eq!((kept.len(), removed), (2, 0));
        let (kept, removed) = dedupe(vec![rec("1", "A", "x"), rec("2", "B", "x")]);
        assert_eq!((kept.len(), removed), (2, 0));
    }

    #[test]
    fn empty_filter_input() {
        let profiles = crate::resources::bundled_profiles().unwrap();
        let allow: BTreeSet<String> = ["en".to_string()].into();
        let (kept, dropped) = filter_non_english(vec![], &profiles, &allow);
        assert!(kept.is_empty());
        assert_eq!(dropped, 0);
        let (kept, dropped) = filter_non_english(vec![rec("1", "A", "?!")], &profiles, &allow);
        assert_eq!((kept.len(), dropped), (1, 0));
    }

    proptest! {
        #[test]
        fn dedupe_is_idempotent_and_conserves(
            rows in prop::collection::vec((0u8..4, 0u8..4), 0..40)
        ) {
            let records: Vec<_> = rows
                .iter()
                .enumerate()
                .map(|(i, (s, q))| rec(&i.to_string(), &format!("S{s}"), &format!("q{q}")))
                .collect();
            let n = records.len();
            let (kept, removed) = dedupe(records);
            prop_assert_eq!(kept.len() + removed, n);
            let (again, removed_again) = dedupe(kept.clone());
            prop_assert_eq!(removed_again, 0);
            prop_assert_eq!(again, kept);
        }
    }
}
