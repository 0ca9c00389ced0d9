const MIN_CHARS: usize = 2;
const MAX_TOKENS: usize = 15;

fn is_double_quote(c: char) -> bool {
    matches!(c, '"' | '\u{201c}' | '\u{201d}')
}

/// Phrases a journalist set in double quotes inside the quote text.
///
/// Quote marks pair up left to right; straight and curly marks are
/// interchangeable. A pair wrapping the entire text is not a highlight.
pub fn extract_highlighted(quote: &str) -> Vec<String> {
    let trimmed = quote.trim();
    let marks: Vec<usize> = trimmed
        .char_indices()
        .filter(|&(_, c)| is_double_quote(c))
        .map(|(i, _)| i)
        .collect();
    let mut out = Vec::new();
    for pair in marks.chunks_exact(2) {
        let (open, close) = (pair[0], pair[1]);
        let close_len = trimmed[close..].chars().next().map_or(1, char::len_utf8);
        if open == 0 && close + close_len == trimmed.len() {
            continue;
        }
        let open_len = trimmed[open..].chars().next().map_or(1, char::len_utf8);
        let inner = trimmed[open + open_len..close].trim();
        if inner.chars().count() < MIN_CHARS || inner.split_whitespace().count() > MAX_TOKENS {
            continue;
        }
        out.push(inner.to_string());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paired_marks() {
        let q = "A $10bn credit line that it drew down earlier this year is \"needed for VW\" and is not invested in options.";
        assert_eq!(extract_highlighted(q), ["needed for VW"]);
        assert!(extract_highlighted("no inner quotes").is_empty());
        assert!(extract_highlighted("He said \"a").is_empty());
    }

    #[test]
    fn curly_and_straight_mix() {
        assert_eq!(
            extract_highlighted("the \u{201c}bad bank\u{201d} and the \"good bank\" plans"),
            ["bad bank", "good bank"]
        );
        assert_eq!(extract_highlighted("a \u{201c}x\" y \"zz\" w \""), vec!["zz"]);
    }

    #[test]
    fn wrapping_and_length_limits() {
        assert!(extract_highlighted("\"It's all Gulf sentiment now,\"").is_empty());
        assert_eq!(
            extract_highlighted("downturn. \"We all feel the rage of the storm\""),
            ["We all feel the rage of the storm"]
        );
        assert!(extract_highlighted("say \"\" or \" \" now").is_empty());
        let long = format!("x \"{}\" y", vec!["w"; 16].join(" "));
        assert!(extract_highlighted(&long).is_empty());
        let ok = format!("x \"{}\" y", vec!["w"; 15].join(" "));
        assert_eq!(extract_highlighted(&ok).len(), 1);
    }
}
