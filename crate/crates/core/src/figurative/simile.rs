use serde::{Deserialize, Serialize};

use crate::lingpipe::{Tag, Token};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimileMatch {
    pub text: String,
    pub rule: u8,
    pub lhs: String,
    pub rhs: String,
}

/// `(ADJ? NOUN)+` starting at `i`, greedy. Returns the end index (exclusive)
/// or `None` if not even one repetition matches.
fn adj_noun_run(tokens: &[Token], mut i: usize) -> Option<usize> {
    let start = i;
    loop {
        let mut j = i;
        if tokens.get(j).is_some_and(|t| t.tag() == Tag::Adj) {
            j += 1;
        }
        if tokens.get(j).is_some_and(|t| t.tag() == Tag::Noun) {
            i = j + 1;
        } else {
            break;
        }
    }
    (i > start).then_some(i)
}

/// `DET? (ADJ? NOUN)+`
fn rhs_phrase(tokens: &[Token], i: usize) -> Option<usize> {
    let after_det = if tokens.get(i).is_some_and(|t| t.tag() == Tag::Det) {
        i + 1
    } else {
        i
    };
    adj_noun_run(tokens, after_det)
}

struct Candidate {
    end: usize,
    rule: u8,
    /// token range of the left-hand side
    lhs: (usize, usize),
    /// token index where the right-hand side starts
    rhs_start: usize,
}

/// `ADJ? NOUN like DET? (ADJ? NOUN)+`
fn rule_one(tokens: &[Token], i: usize) -> Option<Candidate> {
    let mut j = i;
    if tokens.get(j).is_some_and(|t| t.tag() == Tag::Adj) {
        j += 1;
    }
    if !tokens.get(j).is_some_and(|t| t.tag() == Tag::Noun) {
        return None;
    }
    let like = j + 1;
    if !tokens.get(like).is_some_and(|t| t.is("like")) {
        return None;
    }
    let end = rhs_phrase(tokens, like + 1)?;
    Some(Candidate {
        end,
        rule: 1,
        lhs: (i, like),
        rhs_start: like + 1,
    })
}

/// `as ADJ as DET? (ADJ? NOUN)+`
fn rule_two(tokens: &[Token], i: usize) -> Option<Candidate> {
    if !tokens.get(i).is_some_and(|t| t.is("as"))
        || !tokens.get(i + 1).is_some_and(|t| t.tag() == Tag::Adj)
        || !tokens.get(i + 2).is_some_and(|t| t.is("as"))
    {
        return None;
    }
    let end = rhs_phrase(tokens, i + 3)?;
    Some(Candidate {
        end,
        rule: 2,
        lhs: (i + 1, i + 2),
        rhs_start: i + 3,
    })
}

fn span(text: &str, tokens: &[Token], from: usize, to: usize) -> String {
    text[tokens[from].byte_start..tokens[to - 1].byte_end()].to_string()
}

/// Leftmost-longest, non-overlapping matches of both simile patterns within
/// one sentence. `text` is the string the token offsets refer to.
pub fn extract_similes(tokens: &[Token], text: &str) -> Vec<SimileMatch> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < tokens.len() {
        let best = match (rule_one(tokens, i), rule_two(tokens, i)) {
            (Some(a), Some(b)) => Some(if b.end > a.end { b } else { a }),
            (a, b) => a.or(b),
        };
        match best {
            Some(c) => {
                out.push(SimileMatch {
                    text: span(text, tokens, i, c.end),
                    rule: c.rule,
                    lhs: span(text, tokens, c.lhs.0, c.lhs.1),
                    rhs: span(text, tokens, c.rhs_start, c.end),
                });
                i = c.end;
            }
            None => i += 1,
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lingpipe::{pos_tag, tokenize, PosLexicon};

    fn lexicon() -> PosLexicon {
        let mut lex = PosLexicon::default();
        for (w, t) in [
            ("like", Tag::Other),
            ("as", Tag::Other),
            ("the", Tag::Det),
            ("a", Tag::Det),
            ("good", Tag::Adj),
            ("i", Tag::Pron),
            ("and", Tag::Other),
        ] {
            lex.insert_word(w, t);
        }
        lex.push_suffix("al", Tag::Adj);
        lex
    }

    fn similes(text: &str) -> Vec<SimileMatch> {
        extract_similes(&pos_tag(tokenize(text), &lexicon()), text)
    }

    #[test]
    fn rule_one_examples() {
        let m = similes("currency like the dollar");
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].rule, 1);
        assert_eq!(m[0].text, "currency like the dollar");
        assert_eq!(m[0].lhs, "currency");
        assert_eq!(m[0].rhs, "the dollar");

        let m = similes("transformational technologies like broadband");
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].lhs, "transformational technologies");
        assert_eq!(m[0].rhs, "broadband");
    }

    #[test]
    fn rule_two_example() {
        let m = similes("as good as a coin flip");
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].rule, 2);
        assert_eq!(m[0].lhs, "good");
        assert_eq!(m[0].rhs, "a coin flip");
        assert_eq!(m[0].text, "as good as a coin flip");
    }

    #[test]
    fn pronoun_before_like_is_not_a_simile() {
        // I/PRON like/OTHER apples/NOUN: rule 1 needs NOUN before "like"
        assert!(similes("I like apples").is_empty());
    }

    #[test]
    fn rhs_extends_greedily_and_stops() {
        let m = similes("markets like the euro zone bond market and stocks");
        assert_eq!(m[0].rhs, "the euro zone bond market");
        let m = similes("markets like the good");
        assert!(m.is_empty());
    }

    #[test]
    fn matches_do_not_overlap() {
        let m = similes("banks like lenders like brokers");
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].text, "banks like lenders");
    }
}
