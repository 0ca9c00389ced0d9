use std::fmt;

use serde::{Deserialize, Serialize};

use super::pmi::{PmiTable, PmiVariant};
use crate::lingpipe::{Tag, TaxonomyStore, Token};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MetaphorKind {
    #[serde(rename = "is_a")]
    IsA,
    #[serde(rename = "of")]
    Of,
}

impl fmt::Display for MetaphorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MetaphorKind::IsA => "is_a",
            MetaphorKind::Of => "of",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetaphorMatch {
    pub text: String,
    pub kind: MetaphorKind,
    pub lhs_np: String,
    pub rhs_np: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pmi: Option<f64>,
}

fn tag_at(tokens: &[Token], i: usize) -> Option<Tag> {
    tokens.get(i).map(Token::tag)
}

/// Start of the maximal `DET? ADJ* NOUN+` phrase ending just before `end`.
fn np_ending_at(tokens: &[Token], end: usize) -> Option<usize> {
    let mut j = end;
    while j > 0 && tokens[j - 1].tag() == Tag::Noun {
        j -= 1;
    }
    if j == end {
        return None;
    }
    while j > 0 && tokens[j - 1].tag() == Tag::Adj {
        j -= 1;
    }
    if j > 0 && tokens[j - 1].tag() == Tag::Det {
        j -= 1;
    }
    Some(j)
}

/// End of the `DET? ADJ* NOUN+` phrase starting at `start`.
fn np_starting_at(tokens: &[Token], start: usize, allow_det: bool) -> Option<usize> {
    let mut j = start;
    if allow_det && tag_at(tokens, j) == Some(Tag::Det) {
        j += 1;
    }
    while tag_at(tokens, j) == Some(Tag::Adj) {
        j += 1;
    }
    let nouns = j;
    while tag_at(tokens, j) == Some(Tag::Noun) {
        j += 1;
    }
    (j > nouns).then_some(j)
}

fn span(text: &str, tokens: &[Token], from: usize, to: usize) -> String {
    text[tokens[from].byte_start..tokens[to - 1].byte_end()].to_string()
}

/// Lowercased NP without its leading determiner; the PMI key.
fn np_key(tokens: &[Token], from: usize, to: usize) -> String {
    let from = if tokens[from].tag() == Tag::Det { from + 1 } else { from };
    tokens[from..to]
        .iter()
        .map(Token::lower)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Which relatedness checks reject an "is a" pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct IsAFilter {
    pub reject_shared_hypernyms: bool,
}

impl IsAFilter {
    pub fn accepts(&self, taxonomy: &TaxonomyStore, lhs_head: &str, rhs_head: &str) -> bool {
        !taxonomy.is_hyponym(lhs_head, rhs_head)
            && !taxonomy.is_hyponym(rhs_head, lhs_head)
            && taxonomy.shared_hyponyms(lhs_head, rhs_head).is_empty()
            && !(self.reject_shared_hypernyms
                && !taxonomy.shared_hypernyms(lhs_head, rhs_head).is_empty())
    }
}

/// `NP is a NP` where the two head nouns are taxonomically unrelated.
pub fn extract_isa_metaphors(
    tokens: &[Token],
    text: &str,
    taxonomy: &TaxonomyStore,
    filter: IsAFilter,
) -> Vec<MetaphorMatch> {
    let mut out = Vec::new();
    for i in 0..tokens.len() {
        if !tokens[i].is("is") || !tokens.get(i + 1).is_some_and(|t| t.is("a") || t.is("an")) {
            continue;
        }
        let Some(lhs_start) = np_ending_at(tokens, i) else {
            continue;
        };
        let Some(rhs_end) = np_starting_at(tokens, i + 2, false) else {
            continue;
        };
        let lhs_head = tokens[i - 1].lower();
        let rhs_head = tokens[rhs_end - 1].lower();
        if filter.accepts(taxonomy, &lhs_head, &rhs_head) {
            out.push(MetaphorMatch {
                text: span(text, tokens, lhs_start, rhs_end),
                kind: MetaphorKind::IsA,
                lhs_np: span(text, tokens, lhs_start, i),
                rhs_np: span(text, tokens, i + 2, rhs_end),
                pmi: None,
            });
        } else {
            log::trace!("rejected is-a pair {lhs_head:?} / {rhs_head:?}");
        }
    }
    out
}

/// One `NP of NP` occurrence inside a sentence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NpOfNp {
    pub text: String,
    pub lhs_np: String,
    pub rhs_np: String,
    pub lhs_key: String,
    pub rhs_key: String,
}

pub fn np_of_np_occurrences(tokens: &[Token], text: &str) -> Vec<NpOfNp> {
    let mut out = Vec::new();
    for i in 0..tokens.len() {
        if !tokens[i].is("of") {
            continue;
        }
        let Some(lhs_start) = np_ending_at(tokens, i) else {
            continue;
        };
        let Some(rhs_end) = np_starting_at(tokens, i + 1, true) else {
            continue;
        };
        out.push(NpOfNp {
            text: span(text, tokens, lhs_start, rhs_end),
            lhs_np: span(text, tokens, lhs_start, i),
            rhs_np: span(text, tokens, i + 1, rhs_end),
            lhs_key: np_key(tokens, lhs_start, i),
            rhs_key: np_key(tokens, i + 1, rhs_end),
        });
    }
    out
}

/// Counts every `NP of NP` in the given sentences.
pub fn harvest_np_of_np<'a, I>(sentences: I) -> PmiTable
where
    I: IntoIterator<Item = (&'a [Token], &'a str)>,
{
    let mut table = PmiTable::default();
    for (tokens, text) in sentences {
        for occ in np_of_np_occurrences(tokens, text) {
            table.record(&occ.lhs_key, &occ.rhs_key);
        }
    }
    table
}

pub fn extract_of_metaphors(
    tokens: &[Token],
    text: &str,
    table: &PmiTable,
    variant: PmiVariant,
    threshold: f64,
) -> Vec<MetaphorMatch> {
    np_of_np_occurrences(tokens, text)
        .into_iter()
        .filter_map(|occ| {
            let score = table.score(&occ.rhs_key, &occ.lhs_key, variant).ok()?;
            (score >= threshold).then_some(MetaphorMatch {
                text: occ.text,
                kind: MetaphorKind::Of,
                lhs_np: occ.lhs_np,
                rhs_np: occ.rhs_np,
                pmi: Some(score),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lingpipe::{pos_tag, tokenize, PosLexicon};

    fn lexicon() -> PosLexicon {
        let mut lex = PosLexicon::default();
        for (w, t) in [
            ("this", Tag::Det),
            ("a", Tag::Det),
            ("an", Tag::Det),
            ("the", Tag::Det),
            ("is", Tag::Verb),
            ("of", Tag::Other),
            ("and", Tag::Other),
            ("blind", Tag::Adj),
        ] {
            lex.insert_word(w, t);
        }
        lex
    }

    fn tagged(text: &str) -> Vec<Token> {
        pos_tag(tokenize(text), &lexicon())
    }

    fn taxonomy() -> TaxonomyStore {
        TaxonomyStore::parse("t", "dog\tanimal\npuppy\tdog\n").unwrap()
    }

    #[test]
    fn isa_accepts_unrelated_heads() {
        let text = "This tax credit is a lifeline";
        let m = extract_isa_metaphors(&tagged(text), text, &taxonomy(), IsAFilter::default());
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].text, "This tax credit is a lifeline");
        assert_eq!(m[0].lhs_np, "This tax credit");
        assert_eq!(m[0].rhs_np, "lifeline");
        assert_eq!(m[0].kind, MetaphorKind::IsA);
        assert!(m[0].pmi.is_none());
    }

    #[test]
    fn isa_rejects_hyponyms() {
        let text = "A dog is an animal";
        assert!(extract_isa_metaphors(&tagged(text), text, &taxonomy(), IsAFilter::default()).is_empty());
        let text = "An animal is a dog";
        assert!(extract_isa_metaphors(&tagged(text), text, &taxonomy(), IsAFilter::default()).is_empty());
    }

    #[test]
    fn isa_with_no_relation_in_fixture() {
        let t = taxonomy();
        assert!(!t.is_hyponym("time", "thief") && !t.is_hyponym("thief", "time"));
        assert!(t.shared_hyponyms("time", "thief").is_empty());
        let text = "Time is a thief";
        let m = extract_isa_metaphors(&tagged(text), text, &t, IsAFilter::default());
        assert_eq!(m.len(), 1);
    }

    #[test]
    fn isa_needs_nouns_on_both_sides() {
        let text = "This is a lifeline and a lifeline is a";
        assert!(extract_isa_metaphors(&tagged(text), text, &taxonomy(), IsAFilter::default()).is_empty());
    }

    #[test]
    fn shared_hypernym_flag() {
        let t = TaxonomyStore::parse("t", "credit\tasset\nlifeline\tasset\n").unwrap();
        let text = "credit is a lifeline";
        assert_eq!(extract_isa_metaphors(&tagged(text), text, &t, IsAFilter::default()).len(), 1);
        let strict = IsAFilter { reject_shared_hypernyms: true };
        assert!(extract_isa_metaphors(&tagged(text), text, &t, strict).is_empty());
    }

    #[test]
    fn harvest_counts_occurrences() {
        let s1 = "It was a leap of faith";
        let t1 = tagged(s1);
        let table = harvest_np_of_np([(t1.as_slice(), s1)]);
        assert_eq!(table.pair_count("leap", "faith"), 1);
        assert_eq!(table.total_pairs(), 1);

        let empty = harvest_np_of_np(std::iter::empty());
        assert_eq!(empty.total_pairs(), 0);

        let s2 = "the ghettos of poverty and the ghettos of poverty";
        let t2 = tagged(s2);
        let table = harvest_np_of_np([(t2.as_slice(), s2)]);
        assert_eq!(table.pair_count("ghettos", "poverty"), 2);
        assert_eq!(table.total_pairs(), 2);
    }

    #[test]
    fn np_keys_drop_determiners() {
        let s = "the blind leap of the faith";
        let occ = np_of_np_occurrences(&tagged(s), s);
        assert_eq!(occ.len(), 1);
        assert_eq!(occ[0].lhs_key, "blind leap");
        assert_eq!(occ[0].rhs_key, "faith");
        assert_eq!(occ[0].lhs_np, "the blind leap");
        assert_eq!(occ[0].text, s);
    }

    #[test]
    fn of_metaphors_respect_threshold() {
        let s = "a leap of faith";
        let toks = tagged(s);
        let mut table = PmiTable::default();
        table.record("leap", "faith");
        table.record("cost", "living");
        table.record("ghettos", "poverty");
        // paper score: ln(1 / (1/3)) = ln 3
        let m = extract_of_metaphors(&toks, s, &table, PmiVariant::Paper, 1.0);
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].text, "a leap of faith");
        assert!((m[0].pmi.unwrap() - 3f64.ln()).abs() < 1e-12);
        assert!(extract_of_metaphors(&toks, s, &table, PmiVariant::Paper, 1.1).is_empty());
        assert_eq!(
            extract_of_metaphors(&toks, s, &table, PmiVariant::Paper, f64::NEG_INFINITY).len(),
            1
        );
    }
}
