use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};

use super::query::FrequencyTable;

pub const CLOUD_TERMS: usize = 50;
pub const CLOUD_WIDTH: f64 = 800.0;
const MARGIN: f64 = 10.0;
const GAP: f64 = 8.0;
const MIN_SIZE: f64 = 12.0;
const MAX_SIZE: f64 = 72.0;
/// rough advance width of one glyph, as a fraction of the font size
const GLYPH_WIDTH: f64 = 0.6;
const LINE_HEIGHT: f64 = 1.2;
const PALETTE: [&str; 5] = ["#1f4e79", "#2e75b6", "#c55a11", "#548235", "#7f6000"];

fn xml_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

struct Placed<'a> {
    term: &'a str,
    size: f64,
    x: f64,
    baseline: f64,
}

fn font_size(count: usize, min: usize, max: usize) -> f64 {
    if max == min {
        return MAX_SIZE;
    }
    MIN_SIZE + (count - min) as f64 / (max - min) as f64 * (MAX_SIZE - MIN_SIZE)
}

/// SVG 1.1 word cloud of the 50 most frequent terms. Terms are placed in
/// rank order, left to right, wrapping into rows.
pub fn render_wordcloud_svg(table: &FrequencyTable) -> Result<String> {
    let top = table.top(CLOUD_TERMS);
    let (Some(&(_, max)), Some(&(_, min))) = (top.first(), top.last()) else {
        return Err(Error::EmptyTable);
    };

    let mut placed = Vec::with_capacity(top.len());
    let mut x = MARGIN;
    let mut row_top = MARGIN;
    let mut row_height = 0.0f64;
    let mut row_start = 0;
    for (i, &(term, count)) in top.iter().enumerate() {
        let size = font_size(count, min, max);
        let width = term.chars().count() as f64 * size * GLYPH_WIDTH;
        if i > row_start && x + width > CLOUD_WIDTH - MARGIN {
            row_top += row_height;
            x = MARGIN;
            row_height = 0.0;
            row_start = i;
        }
        row_height = row_height.max(size * LINE_HEIGHT);
        placed.push(Placed {
            term,
            size,
            x,
            baseline: 0.0,
        });
        x += width + GAP;
        // rows are filled in descending size, so the first word sets the baseline
        let first = placed[row_start].size;
        placed.last_mut().unwrap().baseline = row_top + first;
    }
    let height = (row_top + row_height + MARGIN).ceil();

    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{height}\" viewBox=\"0 0 {w} {height}\">",
        w = CLOUD_WIDTH
    );
    let _ = writeln!(svg, "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>");
    for (i, p) in placed.iter().enumerate() {
        let _ = writeln!(
            svg,
            "<text x=\"{:.1}\" y=\"{:.1}\" font-family=\"Helvetica, Arial, sans-serif\" font-size=\"{:.1}\" fill=\"{}\">{}</text>",
            p.x,
            p.baseline,
            p.size,
            PALETTE[i % PALETTE.len()],
            xml_escape(p.term)
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

/// Renders and writes the cloud, returning the number of bytes written.
pub fn write_wordcloud_svg(table: &FrequencyTable, path: &Path) -> Result<usize> {
    let svg = render_wordcloud_svg(table)?;
    std::fs::write(path, &svg).map_err(|e| Error::io(path, e))?;
    Ok(svg.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(entries: &[(&str, usize)]) -> FrequencyTable {
        entries.iter().copied().collect()
    }

    fn texts(svg: &str) -> Vec<(String, String)> {
        svg.lines()
            .filter(|l| l.starts_with("<text"))
            .map(|l| {
                let size = l.split("font-size=\"").nth(1).unwrap().split('"').next().unwrap();
                let body = l.split('>').nth(1).unwrap().split('<').next().unwrap();
                (body.to_string(), size.to_string())
            })
            .collect()
    }

    #[test]
    fn single_term_at_max_size() {
        let svg = render_wordcloud_svg(&table(&[("dollar", 10)])).unwrap();
        assert_eq!(texts(&svg), [("dollar".to_string(), "72.0".to_string())]);
        assert!(svg.contains("version=\"1.1\""));
    }

    #[test]
    fn empty_table_errors() {
        assert!(matches!(
            render_wordcloud_svg(&FrequencyTable::default()),
            Err(Error::EmptyTable)
        ));
    }

    #[test]
    fn equal_counts_alphabetical() {
        let svg = render_wordcloud_svg(&table(&[("zeta", 3), ("alpha", 3)])).unwrap();
        let order: Vec<_> = texts(&svg).into_iter().map(|(t, _)| t).collect();
        assert_eq!(order, ["alpha", "zeta"]);
    }

    #[test]
    fn sizes_scale_linearly() {
        let svg = render_wordcloud_svg(&table(&[("a", 1), ("b", 3), ("c", 5)])).unwrap();
        let sizes: Vec<_> = texts(&svg).into_iter().map(|(_, s)| s).collect();
        assert_eq!(sizes, ["72.0", "42.0", "12.0"]);
    }

    #[test]
    fn caps_terms_and_escapes() {
        let entries: Vec<(String, usize)> = (0..80).map(|i| (format!("w{i:02}"), i + 1)).collect();
        let mut t = FrequencyTable::default();
        for (w, c) in &entries {
            t.add(w, *c);
        }
        t.add("r&d", 500);
        let svg = render_wordcloud_svg(&t).unwrap();
        let found = texts(&svg);
        assert_eq!(found.len(), CLOUD_TERMS);
        assert_eq!(found[0].0, "r&amp;d");
        assert_eq!(svg, render_wordcloud_svg(&t).unwrap());
    }
}
