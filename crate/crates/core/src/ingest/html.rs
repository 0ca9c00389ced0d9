//! Entity decoding and tag stripping for quote text.

use crate::rules::collapse_whitespace;

const NAMED: &[(&str, char)] = &[
    ("amp", '&'),
    ("lt", '<'),
    ("gt", '>'),
    ("quot", '"'),
    ("apos", '\''),
    ("nbsp", '\u{a0}'),
];

// Longest entity body we bother scanning for, e.g. "#x10FFFF".
const MAX_ENTITY_BODY: usize = 10;

/// Decodes named and numeric character references in a single pass.
/// Decoded output is never rescanned, so `&amp;lt;` becomes `&lt;`.
pub fn unescape_html(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    let mut rest = text;
    while let Some(amp) = rest.find('&') {
        out.push_str(&rest[..amp]);
        let after = &rest[amp + 1..];
        match decode_entity(after) {
            Some((ch, consumed)) => {
                out.push(ch);
                rest = &after[consumed..];
            }
            None => {
                out.push('&');
                rest = after;
            }
        }
    }
    out.push_str(rest);
    out
}

/// Returns the decoded char and the number of bytes consumed after the `&`,
/// including the terminating `;`.
fn decode_entity(after: &str) -> Option<(char, usize)> {
    let semi = after
        .char_indices()
        .take(MAX_ENTITY_BODY + 1)
        .find(|&(_, c)| c == ';')
        .map(|(i, _)| i)?;
    let body = &after[..semi];
    let ch = if let Some(num) = body.strip_prefix('#') {
        let value = if let Some(hex) = num.strip_prefix(['x', 'X']) {
            if hex.is_empty() || !hex.chars().all(|c| c.is_ascii_hexdigit()) {
                return None;
            }
            u32::from_str_radix(hex, 16).ok()?
        } else {
            if num.is_empty() || !num.chars().all(|c| c.is_ascii_digit()) {
                return None;
            }
            num.parse::<u32>().ok()?
        };
        if value == 0 {
            return None;
        }
        char::from_u32(value)?
    } else {
        NAMED.iter().find(|(name, _)| *name == body).map(|&(_, c)| c)?
    };
    Some((ch, semi + 1))
}

/// Removes `<...>` tag spans, then collapses whitespace.
///
/// A tag opens with `<` immediately followed by an ASCII letter, `/`, `!` or
/// `?`, and closes at the next `>` provided no other `<` intervenes. Anything
/// else is literal text, so `5 < 6 but > 4` survives intact. Removal repeats
/// until no tag is left, since deleting one span can expose another.
pub fn strip_html(text: &str) -> String {
    let mut current = remove_tags(text);
    loop {
        let next = remove_tags(&current);
        if next.len() == current.len() {
            break;
        }
        current = next;
    }
    collapse_whitespace(&current)
}

fn remove_tags(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    let mut rest = text;
    while let Some(lt) = rest.find('<') {
        out.push_str(&rest[..lt]);
        let after = &rest[lt + 1..];
        match tag_len(after) {
            Some(len) => {
                if !is_inline(&after[..len]) {
                    out.push(' ');
                }
                rest = &after[len..];
            }
            None => {
                out.push('<');
                rest = after;
            }
        }
    }
    out.push_str(rest);
    out
}

/// Formatting tags that sit inside a word run; every other tag separates words.
const INLINE_TAGS: [&str; 16] = [
    "a", "abbr", "b", "big", "cite", "em", "font", "i", "mark", "q", "small", "span", "strong",
    "sub", "sup", "u",
];

/// `body` is the tag without its leading `<`, including the closing `>`.
fn is_inline(body: &str) -> bool {
    if body.starts_with('!') {
        return true;
    }
    let name: String = body
        .trim_start_matches('/')
        .chars()
        .take_while(char::is_ascii_alphanumeric)
        .collect::<String>()
        .to_ascii_lowercase();
    INLINE_TAGS.contains(&name.as_str())
}

fn tag_len(after: &str) -> Option<usize> {
    let first = after.chars().next()?;
    if !(first.is_ascii_alphabetic() || matches!(first, '/' | '!' | '?')) {
        return None;
    }
    for (i, c) in after.char_indices() {
        match c {
            '>' => return Some(i + 1),
            '<' => return None,
            _ => {}
        }
    }
    None
}

/// The full cleaning step applied to every raw quote.
pub fn clean_quote(raw: &str) -> String {
    strip_html(&unescape_html(raw))
}
