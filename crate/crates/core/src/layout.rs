//! Grouping rich characters into words and lines.

use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::ingest::{PdfDocument, RichChar};
use crate::jsonl::{self, JsonlError};

/// Allowed overlap between consecutive words, in user-space units.
pub const WORD_OVERLAP_EPS: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct LayoutConfig {
    /// Two characters share a line when their baselines differ by at most
    /// this fraction of the larger font size.
    pub line_tolerance: f64,
    /// A new word starts when the horizontal gap exceeds this fraction of
    /// the line's dominant font size.
    pub word_gap: f64,
}

impl Default for LayoutConfig {
    fn default() -> Self {
        LayoutConfig {
            line_tolerance: 0.4,
            word_gap: 0.3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Word {
    #[serde(rename = "t")]
    pub text: String,
    pub x0: f64,
    pub x1: f64,
}

/// A visual line of words; the unit of classification.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Line {
    pub doc_id: String,
    pub page: usize,
    pub line_idx: usize,
    pub y: f64,
    #[serde(rename = "font_size")]
    pub dominant_font_size: f64,
    pub words: Vec<Word>,
}

impl Line {
    pub fn key(&self) -> LineKey {
        LineKey {
            doc_id: self.doc_id.clone(),
            page: self.page,
            line_idx: self.line_idx,
        }
    }

    pub fn text(&self) -> String {
        self.words
            .iter()
            .map(|w| w.text.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Distance from the left edge of the first word to the right edge of
    /// the last one.
    pub fn width(&self) -> f64 {
        match (self.words.first(), self.words.last()) {
            (Some(first), Some(last)) => last.x1 - first.x0,
            _ => 0.0,
        }
    }

    pub fn tokens(&self) -> Vec<&str> {
        self.words.iter().map(|w| w.text.as_str()).collect()
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.words.is_empty() {
            return Err("line has no words".into());
        }
        for w in &self.words {
            if w.text.is_empty() || w.text.chars().any(char::is_whitespace) {
                return Err(format!("invalid word text {:?}", w.text));
            }
            if !(w.x0 <= w.x1) {
                return Err(format!("word {:?} has x0 > x1", w.text));
            }
        }
        for pair in self.words.windows(2) {
            if !(pair[0].x0 < pair[1].x0) {
                return Err("words are not sorted by x0".into());
            }
            if pair[0].x1 > pair[1].x0 + WORD_OVERLAP_EPS {
                return Err("consecutive words overlap".into());
            }
        }
        Ok(())
    }
}

/// Identifies a line across files.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LineKey {
    pub doc_id: String,
    pub page: usize,
    pub line_idx: usize,
}

/// Gaps between consecutive words, clamped at zero.
pub fn word_margins(line: &Line) -> Vec<f64> {
    line.words
        .windows(2)
        .map(|p| (p[1].x0 - p[0].x1).max(0.0))
        .collect()
}

/// Assembles every page of `doc` into lines, top to bottom.
pub fn assemble_lines(doc: &PdfDocument, config: &LayoutConfig) -> Vec<Vec<Line>> {
    doc.pages
        .iter()
        .enumerate()
        .map(|(p, page)| assemble_page(&doc.doc_id, p, &page.chars, config))
        .collect()
}

pub fn assemble_page(doc_id: &str, page: usize, chars: &[RichChar], config: &LayoutConfig) -> Vec<Line> {
    let mut order: Vec<&RichChar> = chars.iter().collect();
    order.sort_by(|a, b| b.y.total_cmp(&a.y));

    let mut clusters: Vec<Vec<&RichChar>> = Vec::new();
    for c in order {
        match clusters.last_mut() {
            Some(cur)
                if {
                    let prev = cur[cur.len() - 1];
                    prev.y - c.y <= config.line_tolerance * prev.font_size.max(c.font_size)
                } =>
            {
                cur.push(c)
            }
            _ => clusters.push(vec![c]),
        }
    }

    let mut lines = Vec::new();
    for mut cluster in clusters {
        let ink: Vec<&RichChar> = cluster
            .iter()
            .copied()
            .filter(|c| !c.codepoint.is_whitespace())
            .collect();
        if ink.is_empty() {
            continue;
        }
        let font_size = mode_prefer_larger(ink.iter().map(|c| c.font_size));
        let y = mode_prefer_larger(ink.iter().map(|c| c.y));
        cluster.sort_by(|a, b| a.x.total_cmp(&b.x));
        let words = merge_overlaps(split_words(&cluster, config.word_gap * font_size));
        lines.push(Line {
            doc_id: doc_id.to_owned(),
            page,
            line_idx: lines.len(),
            y,
            dominant_font_size: font_size,
            words,
        });
    }
    lines
}

fn split_words(chars: &[&RichChar], max_gap: f64) -> Vec<Word> {
    let mut words = Vec::new();
    let mut cur: Option<Word> = None;
    for c in chars {
        if c.codepoint.is_whitespace() {
            words.extend(cur.take());
            continue;
        }
        match cur.as_mut() {
            Some(w) if c.x - w.x1 <= max_gap => {
                w.text.push(c.codepoint);
                w.x0 = w.x0.min(c.x);
                w.x1 = w.x1.max(c.right());
            }
            _ => {
                words.extend(cur.take());
                cur = Some(Word {
                    text: c.codepoint.to_string(),
                    x0: c.x,
                    x1: c.right().max(c.x),
                });
            }
        }
    }
    words.extend(cur);
    words
}

fn merge_overlaps(words: Vec<Word>) -> Vec<Word> {
    let mut out: Vec<Word> = Vec::with_capacity(words.len());
    for w in words {
        match out.last_mut() {
            Some(prev) if w.x0 < prev.x1 - WORD_OVERLAP_EPS || w.x0 <= prev.x0 => {
                prev.text.push_str(&w.text);
                prev.x1 = prev.x1.max(w.x1);
            }
            _ => out.push(w),
        }
    }
    out
}

/// Most frequent value; ties go to the larger value.
fn mode_prefer_larger(values: impl Iterator<Item = f64>) -> f64 {
    let mut v: Vec<f64> = values.collect();
    v.sort_by(f64::total_cmp);
    let mut best = (0usize, f64::NEG_INFINITY);
    let mut i = 0;
    while i < v.len() {
        let mut j = i;
        while j < v.len() && v[j] == v[i] {
            j += 1;
        }
        if j - i >= best.0 {
            best = (j - i, v[i]);
        }
        i = j;
    }
    best.1
}

pub fn read_lines_jsonl<R: BufRead>(input: R) -> impl Iterator<Item = Result<Line, JsonlError>> {
    jsonl::records(input)
}

pub fn write_lines_jsonl<'a, W: Write>(
    lines: impl IntoIterator<Item = &'a Line>,
    mut out: W,
) -> std::io::Result<()> {
    for line in lines {
        jsonl::write_record(&mut out, line)?;
    }
    Ok(())
}

/// Groups a line stream into pages, preserving order.
pub fn group_pages(lines: Vec<Line>) -> Vec<Vec<Line>> {
    let mut pages: Vec<Vec<Line>> = Vec::new();
    for line in lines {
        match pages.last_mut() {
            Some(p) if p[0].doc_id == line.doc_id && p[0].page == line.page => p.push(line),
            _ => pages.push(vec![line]),
        }
    }
    pages
}

/// Splits a line stream into runs sharing a `doc_id`. A read error ends
/// the stream after being yielded.
pub fn group_documents<E, I: Iterator<Item = Result<Line, E>>>(lines: I) -> DocumentGroups<I> {
    DocumentGroups {
        inner: lines,
        pending: None,
        done: false,
    }
}

pub struct DocumentGroups<I> {
    inner: I,
    pending: Option<Line>,
    done: bool,
}

impl<E, I: Iterator<Item = Result<Line, E>>> Iterator for DocumentGroups<I> {
    type Item = Result<Vec<Line>, E>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let mut doc: Vec<Line> = self.pending.take().into_iter().collect();
        loop {
            match self.inner.next() {
                None => {
                    self.done = true;
                    return (!doc.is_empty()).then_some(Ok(doc));
                }
                Some(Err(e)) => {
                    self.done = true;
                    return Some(Err(e));
                }
                Some(Ok(line)) => {
                    if doc.first().is_some_and(|f| f.doc_id != line.doc_id) {
                        self.pending = Some(line);
                        return Some(Ok(doc));
                    }
                    doc.push(line);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ingest::Page;
    use proptest::prelude::*;

    fn ch(c: char, x: f64, y: f64) -> RichChar {
        RichChar {
            codepoint: c,
            page: 0,
            x,
            y,
            font_name: "F".into(),
            font_size: 12.0,
            advance: None,
        }
    }

    fn doc(chars: Vec<RichChar>) -> PdfDocument {
        PdfDocument {
            doc_id: "d".into(),
            pages: vec![Page {
                width: 612.0,
                height: 792.0,
                chars,
            }],
        }
    }

    fn word(t: &str, x0: f64, x1: f64) -> Word {
        Word {
            text: t.into(),
            x0,
            x1,
        }
    }

    #[test]
    fn word_break_by_gap() {
        let d = doc(vec![
            ch('T', 100.0, 700.0),
            ch('o', 106.0, 700.0),
            ch('A', 130.0, 700.0),
        ]);
        let pages = assemble_lines(&d, &LayoutConfig::default());
        let lines = &pages[0];
        assert_eq!(lines.len(), 1);
        assert_eq!(
            lines[0].words,
            vec![word("To", 100.0, 112.0), word("A", 130.0, 136.0)]
        );
        assert_eq!(word_margins(&lines[0]), vec![18.0]);
    }

    #[test]
    fn lines_ordered_top_down() {
        let d = doc(vec![ch('b', 100.0, 680.0), ch('a', 100.0, 700.0)]);
        let lines = &assemble_lines(&d, &LayoutConfig::default())[0];
        assert_eq!(lines.len(), 2);
        assert_eq!((lines[0].line_idx, lines[0].y), (0, 700.0));
        assert_eq!((lines[1].line_idx, lines[1].y), (1, 680.0));
    }

    #[test]
    fn empty_page() {
        assert!(assemble_lines(&doc(vec![]), &LayoutConfig::default())[0].is_empty());
    }

    #[test]
    fn explicit_space_breaks_words() {
        let d = doc(vec![
            ch('a', 100.0, 700.0),
            ch(' ', 106.0, 700.0),
            ch('b', 107.0, 700.0),
        ]);
        let lines = &assemble_lines(&d, &LayoutConfig::default())[0];
        assert_eq!(lines[0].tokens(), vec!["a", "b"]);
        assert!(lines[0].validate().is_ok());
    }

    #[test]
    fn overlapping_words_after_space_merge() {
        let d = doc(vec![
            ch('a', 100.0, 700.0),
            ch(' ', 103.0, 700.0),
            ch('b', 102.0, 700.0),
        ]);
        let lines = &assemble_lines(&d, &LayoutConfig::default())[0];
        assert_eq!(lines[0].tokens(), vec!["ab"]);
    }

    #[test]
    fn superscript_stays_on_line() {
        let d = doc(vec![ch('x', 100.0, 700.0), ch('2', 106.0, 704.0)]);
        assert_eq!(assemble_lines(&d, &LayoutConfig::default())[0].len(), 1);
    }

    #[test]
    fn whitespace_only_rows_are_dropped() {
        let d = doc(vec![ch(' ', 100.0, 600.0), ch('a', 100.0, 700.0)]);
        assert_eq!(assemble_lines(&d, &LayoutConfig::default())[0].len(), 1);
    }

    #[test]
    fn margins_of_three_words() {
        let line = Line {
            doc_id: "d".into(),
            page: 0,
            line_idx: 0,
            y: 0.0,
            dominant_font_size: 10.0,
            words: vec![word("a", 0.0, 10.0), word("b", 12.0, 20.0), word("c", 40.0, 50.0)],
        };
        assert_eq!(word_margins(&line), vec![2.0, 20.0]);
        let single = Line {
            words: vec![word("a", 0.0, 10.0)],
            ..line
        };
        assert!(word_margins(&single).is_empty());
    }

    #[test]
    fn documents_are_grouped_in_order() {
        let mk = |d: &str, i: usize| Line {
            doc_id: d.into(),
            page: 0,
            line_idx: i,
            y: 0.0,
            dominant_font_size: 10.0,
            words: vec![word("a", 0.0, 1.0)],
        };
        let lines = vec![
            Ok(mk("a", 0)),
            Ok(mk("a", 1)),
            Ok(mk("b", 0)),
            Err("bad"),
            Ok(mk("c", 0)),
        ];
        let docs: Vec<Result<Vec<Line>, &str>> = group_documents(lines.into_iter()).collect();
        // "b" may be incomplete, so it is dropped along with everything after the error
        assert_eq!(docs.len(), 2);
        assert_eq!(docs[0].as_ref().unwrap().len(), 2);
        assert_eq!(docs[1], Err("bad"));
    }

    #[test]
    fn dominant_size_tie_prefers_larger() {
        assert_eq!(mode_prefer_larger([10.0, 12.0, 10.0, 12.0].into_iter()), 12.0);
        assert_eq!(mode_prefer_larger([10.0, 12.0, 10.0].into_iter()), 10.0);
    }

    fn arb_chars() -> impl Strategy<Value = Vec<RichChar>> {
        proptest::collection::vec(
            (
                prop_oneof![Just(' '), proptest::char::range('a', 'z')],
                0.0f64..600.0,
                0u32..40,
                prop_oneof![Just(9.0), Just(10.0), Just(12.0)],
                -1.0f64..1.0,
            ),
            0..120,
        )
        .prop_map(|v| {
            v.into_iter()
                .map(|(c, x, row, size, jitter)| RichChar {
                    codepoint: c,
                    page: 0,
                    x,
                    y: 780.0 - row as f64 * 18.0 + jitter,
                    font_name: "F".into(),
                    font_size: size,
                    advance: None,
                })
                .collect()
        })
    }

    proptest! {
        #[test]
        fn assembled_lines_respect_invariants(chars in arb_chars()) {
            let ink = chars.iter().filter(|c| !c.codepoint.is_whitespace()).count();
            let d = doc(chars);
            let lines = assemble_lines(&d, &LayoutConfig::default()).remove(0);
            let total: usize = lines.iter().flat_map(|l| &l.words).map(|w| w.text.chars().count()).sum();
            prop_assert_eq!(total, ink);
            for (i, line) in lines.iter().enumerate() {
                prop_assert_eq!(line.line_idx, i);
                prop_assert!(line.validate().is_ok(), "{:?}", line.validate());
            }
            for pair in lines.windows(2) {
                prop_assert!(pair[0].y > pair[1].y);
            }
            let again = assemble_lines(&d, &LayoutConfig::default()).remove(0);
            prop_assert_eq!(again, lines);
        }
    }
}
