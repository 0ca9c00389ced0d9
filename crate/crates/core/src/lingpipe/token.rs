use std::fmt;
use std::str::FromStr;

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tag {
    Noun,
    Adj,
    Det,
    Verb,
    Pron,
    Other,
}

impl Tag {
    pub fn as_str(self) -> &'static str {
        match self {
            Tag::Noun => "NOUN",
            Tag::Adj => "ADJ",
            Tag::Det => "DET",
            Tag::Verb => "VERB",
            Tag::Pron => "PRON",
            Tag::Other => "OTHER",
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Tag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "NOUN" => Tag::Noun,
            "ADJ" => Tag::Adj,
            "DET" => Tag::Det,
            "VERB" => Tag::Verb,
            "PRON" => Tag::Pron,
            "OTHER" => Tag::Other,
            other => return Err(Error::Config(format!("unknown tag {other:?}"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub surface: String,
    /// character offset into the tokenized text
    pub start: usize,
    /// byte offset into the tokenized text
    pub byte_start: usize,
    pub tag: Option<Tag>,
}

impl Token {
    pub fn byte_end(&self) -> usize {
        self.byte_start + self.surface.len()
    }

    pub fn char_end(&self) -> usize {
        self.start + self.surface.chars().count()
    }

    pub fn is_word(&self) -> bool {
        self.surface.chars().next().is_some_and(is_word_char)
    }

    pub fn tag(&self) -> Tag {
        self.tag.unwrap_or(Tag::Other)
    }

    pub fn lower(&self) -> String {
        self.surface.to_lowercase()
    }

    pub fn is(&self, word: &str) -> bool {
        self.surface.eq_ignore_ascii_case(word)
    }
}

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric()
}

fn is_apostrophe(c: char) -> bool {
    c == '\'' || c == '\u{2019}'
}

/// Splits text into word tokens (letters and digits, with apostrophes allowed
/// between them) and single-character punctuation tokens. Whitespace is
/// dropped. Offsets are relative to `text`.
pub fn tokenize(text: &str) -> Vec<Token> {
    let mut tokens = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (byte, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        if is_word_char(c) {
            let mut end = i + 1;
            loop {
                match chars.get(end) {
                    Some(&(_, c)) if is_word_char(c) => end += 1,
                    Some(&(_, c))
                        if is_apostrophe(c)
                            && chars.get(end + 1).is_some_and(|&(_, n)| is_word_char(n)) =>
                    {
                        end += 2
                    }
                    _ => break,
                }
            }
            i = end;
        } else {
            i += 1;
        }
        let byte_end = chars.get(i).map_or(text.len(), |&(b, _)| b);
        tokens.push(Token {
            surface: text[byte..byte_end].to_string(),
            start,
            byte_start: byte,
            tag: None,
        });
    }
    tokens
}
