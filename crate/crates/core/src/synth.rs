//! Synthetic corpora with known line roles, for self-tests.
//!
//! Every page is a column of prose, optionally with one table. Table cells
//! are separated by at least `table_gap`, prose words by `prose_gap` times a
//! per-line stretch in `[1, 1 + jitter]`.

use std::fs::File;
use std::io::BufWriter;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::corpus::{build_manifest, CorpusError, CHARS_DIR, LABELS_DIR, LINES_DIR};
use crate::ingest::{write_richchar_jsonl, Page, PdfDocument, RichChar};
use crate::labels::{write_labeled_jsonl, Label, LabelSource, LabeledLine};
use crate::layout::{write_lines_jsonl, Line, Word};

pub const PAGE_WIDTH: f64 = 612.0;
pub const PAGE_HEIGHT: f64 = 792.0;
pub const FONT_SIZE: f64 = 10.0;
const LEFT: f64 = 72.0;
const RIGHT: f64 = 540.0;
const TOP: f64 = 740.0;
const LEADING: f64 = 13.0;
const MAX_LINES: usize = 50;
/// Prose lines on the prose side of every interior caption.
pub const MIN_PROSE_CONTEXT: usize = 8;
pub const MIN_TABLE_ROWS: usize = 8;
pub const MAX_TABLE_ROWS: usize = 14;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SynthConfig {
    pub docs: usize,
    pub seed: u64,
    pub table_gap: f64,
    pub prose_gap: f64,
    pub jitter: f64,
    pub min_pages: usize,
    pub max_pages: usize,
    /// Share of pages without a table. Prose on such pages gets NAM near 1.
    pub no_table_rate: f64,
    /// Share of table pages whose caption sits on the first or last line.
    pub edge_caption_rate: f64,
    pub split_ratio: f64,
    pub write_chars: bool,
}

impl Default for SynthConfig {
    fn default() -> Self {
        SynthConfig {
            docs: 10,
            seed: 7,
            table_gap: 8.0,
            prose_gap: 2.0,
            jitter: 0.25,
            min_pages: 1,
            max_pages: 3,
            no_table_rate: 0.0,
            edge_caption_rate: 0.15,
            split_ratio: 0.75,
            write_chars: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LineRole {
    Prose,
    Caption,
    Header,
    Row,
}

impl LineRole {
    pub fn gold(self) -> Label {
        Label::from_sign(matches!(self, LineRole::Header | LineRole::Row))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CaptionPlacement {
    Interior,
    Edge,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SynthCaption {
    pub page: usize,
    pub line_idx: usize,
    pub placement: CaptionPlacement,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SynthDocument {
    pub chars: PdfDocument,
    pub pages: Vec<Vec<Line>>,
    pub roles: Vec<Vec<LineRole>>,
    pub captions: Vec<SynthCaption>,
}

impl SynthDocument {
    pub fn gold(&self) -> Vec<LabeledLine> {
        self.pages
            .iter()
            .zip(&self.roles)
            .flat_map(|(lines, roles)| {
                lines.iter().zip(roles).map(|(l, r)| LabeledLine {
                    line: l.clone(),
                    label: r.gold(),
                    source: LabelSource::Gold,
                    caption: None,
                })
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SynthStats {
    pub docs: usize,
    pub pages: usize,
    pub lines: usize,
    pub table_lines: usize,
    pub captions: usize,
    pub interior_captions: usize,
    pub edge_captions: usize,
}

const DETERMINERS: &[&str] = &["the", "a", "this", "each", "every", "these", "our", "an"];
const PREPOSITIONS: &[&str] = &[
    "of", "in", "on", "for", "with", "from", "by", "over", "into", "between",
];
const CONJUNCTIONS: &[&str] = &["and", "but", "while", "because", "although", "so"];
const PRONOUNS: &[&str] = &["we", "it", "they", "which", "that"];
const NOUNS: &[&str] = &[
    "model",
    "method",
    "document",
    "table",
    "line",
    "feature",
    "approach",
    "system",
    "paper",
    "result",
    "corpus",
    "classifier",
    "region",
    "layout",
    "margin",
    "label",
    "experiment",
    "page",
    "performance",
    "evaluation",
    "baseline",
    "dataset",
    "word",
    "structure",
    "caption",
    "heuristic",
    "annotation",
    "analysis",
    "paradigm",
    "accuracy",
    "information",
    "text",
    "format",
    "reader",
];
const VERBS: &[&str] = &[
    "shows",
    "uses",
    "detects",
    "improves",
    "proposed",
    "learns",
    "extracts",
    "achieves",
    "describes",
    "considers",
    "combines",
    "outperforms",
    "requires",
    "produces",
    "observed",
    "trained",
    "evaluated",
    "found",
    "designed",
    "compared",
    "reported",
    "build",
    "apply",
    "generate",
];
const ADJECTIVES: &[&str] = &[
    "large",
    "different",
    "important",
    "simple",
    "effective",
    "robust",
    "linguistic",
    "new",
    "several",
    "noisy",
    "automatic",
    "traditional",
    "open",
    "weak",
    "visual",
    "general",
    "similar",
    "typical",
    "previous",
    "significant",
];
const ADVERBS: &[&str] = &[
    "also",
    "quickly",
    "finally",
    "often",
    "generally",
    "usually",
    "significantly",
    "automatically",
    "further",
    "largely",
    "clearly",
    "slightly",
];
const NAMES: &[&str] = &[
    "Stanford",
    "Google",
    "Microsoft",
    "Beijing",
    "London",
    "Germany",
    "John",
    "Smith",
    "Wang",
    "Paris",
    "Mary",
    "ACL",
];
const HEADERS: &[&str] = &[
    "Method",
    "Accuracy",
    "Precision",
    "Recall",
    "F1",
    "Size",
    "Time",
    "Error",
    "Score",
    "Data",
    "Lines",
    "Pages",
    "Model",
    "Features",
    "Rate",
];
const ROW_LABELS: &[&str] = &[
    "SVM",
    "LR",
    "NB",
    "Ensemble",
    "Baseline",
    "Heuristics",
    "ICDAR",
    "ACL",
    "Ours",
    "CRF",
    "Rules",
    "Voting",
    "Random",
    "Oracle",
    "Human",
];
const CAPTION_WORDS: &[&str] = &[
    "results",
    "on",
    "the",
    "test",
    "set",
    "accuracy",
    "of",
    "different",
    "feature",
    "sets",
    "comparison",
    "with",
    "baselines",
    "statistics",
    "datasets",
    "ablation",
    "study",
];

fn char_width(c: char) -> f64 {
    let em = match c {
        'i' | 'j' | 'l' | '.' | ',' | ':' | ';' | '\'' | '!' | '|' => 0.28,
        'f' | 't' | 'r' | 'I' | '(' | ')' | '-' => 0.33,
        'm' | 'w' => 0.78,
        'M' | 'W' => 0.89,
        '%' => 0.83,
        c if c.is_ascii_digit() => 0.5,
        c if c.is_ascii_uppercase() => 0.67,
        _ => 0.5,
    };
    em * FONT_SIZE
}

fn text_width(t: &str) -> f64 {
    t.chars().map(char_width).sum()
}

fn pick<'a>(rng: &mut ChaCha8Rng, list: &[&'a str]) -> &'a str {
    list.choose(rng).copied().unwrap_or("x")
}

fn prose_word(rng: &mut ChaCha8Rng) -> String {
    let r: f64 = rng.gen();
    let w = match r {
        r if r < 0.16 => pick(rng, DETERMINERS),
        r if r < 0.28 => pick(rng, PREPOSITIONS),
        r if r < 0.33 => pick(rng, CONJUNCTIONS),
        r if r < 0.38 => pick(rng, PRONOUNS),
        r if r < 0.63 => pick(rng, NOUNS),
        r if r < 0.78 => pick(rng, VERBS),
        r if r < 0.90 => pick(rng, ADJECTIVES),
        r if r < 0.96 => pick(rng, ADVERBS),
        r if r < 0.985 => pick(rng, NAMES),
        _ => return rng.gen_range(1..=2020).to_string(),
    };
    let mut w = w.to_owned();
    if rng.gen_bool(0.06) {
        w.push(if rng.gen_bool(0.5) { ',' } else { '.' });
    }
    w
}

/// Lays out tokens starting at `LEFT`; gaps[i] precedes token i + 1.
fn place(tokens: &[String], starts: &[f64], page: usize, y: f64, font: &str) -> Vec<RichChar> {
    let mut chars = Vec::new();
    for (i, (t, &x0)) in tokens.iter().zip(starts).enumerate() {
        if i > 0 {
            let prev_end = chars
                .last()
                .map(|c: &RichChar| c.x + c.advance.unwrap_or(0.0))
                .unwrap_or(x0);
            chars.push(RichChar {
                codepoint: ' ',
                page,
                x: prev_end,
                y,
                font_name: font.into(),
                font_size: FONT_SIZE,
                advance: Some(x0 - prev_end),
            });
        }
        let mut x = x0;
        for c in t.chars() {
            let w = char_width(c);
            chars.push(RichChar {
                codepoint: c,
                page,
                x,
                y,
                font_name: font.into(),
                font_size: FONT_SIZE,
                advance: Some(w),
            });
            x += w;
        }
    }
    chars
}

/// Words exactly as the layout module rebuilds them from `chars`.
fn words_of(chars: &[RichChar]) -> Vec<Word> {
    let mut words: Vec<Word> = Vec::new();
    let mut cur: Option<Word> = None;
    for c in chars {
        if c.codepoint == ' ' {
            words.extend(cur.take());
            continue;
        }
        let right = c.x + c.advance.unwrap_or(0.0);
        match cur.as_mut() {
            Some(w) => {
                w.text.push(c.codepoint);
                w.x1 = w.x1.max(right);
            }
            None => {
                cur = Some(Word {
                    text: c.codepoint.to_string(),
                    x0: c.x,
                    x1: right,
                })
            }
        }
    }
    words.extend(cur);
    words
}

struct PageBuilder<'a> {
    doc_id: &'a str,
    page: usize,
    chars: Vec<RichChar>,
    lines: Vec<Line>,
    roles: Vec<LineRole>,
}

impl PageBuilder<'_> {
    fn push(&mut self, tokens: &[String], starts: &[f64], role: LineRole, font: &str) {
        let y = TOP - LEADING * self.lines.len() as f64;
        let chars = place(tokens, starts, self.page, y, font);
        self.lines.push(Line {
            doc_id: self.doc_id.to_owned(),
            page: self.page,
            line_idx: self.lines.len(),
            y,
            dominant_font_size: FONT_SIZE,
            words: words_of(&chars),
        });
        self.chars.extend(chars);
        self.roles.push(role);
    }

    fn push_flowing(&mut self, tokens: &[String], gap: f64, role: LineRole, font: &str) {
        let mut starts = Vec::with_capacity(tokens.len());
        let mut x = LEFT;
        for t in tokens {
            starts.push(x);
            x += text_width(t) + gap;
        }
        self.push(tokens, &starts, role, font);
    }

    fn prose(&mut self, rng: &mut ChaCha8Rng, n: usize, cfg: &SynthConfig) {
        let mut left_in_paragraph = rng.gen_range(3..=9);
        for _ in 0..n {
            left_in_paragraph -= 1;
            let last = left_in_paragraph == 0;
            let stretch = if last {
                1.0
            } else {
                1.0 + rng.gen::<f64>() * cfg.jitter
            };
            let gap = cfg.prose_gap * stretch;
            let limit = if last {
                rng.gen_range(LEFT + 80.0..RIGHT)
            } else {
                RIGHT
            };
            let mut tokens = Vec::new();
            let mut x = LEFT;
            loop {
                let w = prose_word(rng);
                let end = x + text_width(&w);
                if end > limit && !tokens.is_empty() {
                    break;
                }
                x = end + gap;
                tokens.push(w);
            }
            self.push_flowing(&tokens, gap, LineRole::Prose, "Times-Roman");
            if last {
                left_in_paragraph = rng.gen_range(3..=9);
            }
        }
    }

    fn caption(&mut self, rng: &mut ChaCha8Rng, number: usize, cfg: &SynthConfig) {
        let mut tokens = match rng.gen_range(0..4) {
            0 => vec!["Tab.".to_owned(), format!("{number}")],
            1 => vec!["Table".to_owned(), format!("{}.", roman(number))],
            _ => vec!["Table".to_owned(), format!("{number}:")],
        };
        for _ in 0..rng.gen_range(2..8) {
            tokens.push(pick(rng, CAPTION_WORDS).to_owned());
        }
        self.push_flowing(&tokens, cfg.prose_gap, LineRole::Caption, "Times-Bold");
    }

    fn table(&mut self, rng: &mut ChaCha8Rng, rows: usize, cfg: &SynthConfig) {
        let cols = rng.gen_range(3..=6);
        let mut grid: Vec<Vec<String>> = Vec::with_capacity(rows);
        let mut header: Vec<String> = HEADERS
            .choose_multiple(rng, cols)
            .map(|s| s.to_string())
            .collect();
        header[0] = "Method".into();
        grid.push(header);
        let formats: Vec<u8> = (1..cols).map(|_| rng.gen_range(0..4)).collect();
        for _ in 1..rows {
            let mut row = vec![pick(rng, ROW_LABELS).to_owned()];
            for f in &formats {
                row.push(match f {
                    0 => format!("{:.4}", rng.gen::<f64>()),
                    1 => format!("{:.2}", rng.gen_range(0.0..100.0)),
                    2 => rng.gen_range(1..100_000).to_string(),
                    _ => format!("{:.1}%", rng.gen_range(0.0..100.0)),
                });
            }
            grid.push(row);
        }
        let mut col_x = vec![LEFT + rng.gen_range(0.0..40.0)];
        for c in 0..cols - 1 {
            let width = grid.iter().map(|r| text_width(&r[c])).fold(0.0, f64::max);
            let extra = rng.gen::<f64>() * cfg.table_gap;
            col_x.push(col_x[c] + width + cfg.table_gap + extra);
        }
        for (r, row) in grid.iter().enumerate() {
            let role = if r == 0 { LineRole::Header } else { LineRole::Row };
            self.push(row, &col_x, role, "Helvetica");
        }
    }
}

fn roman(n: usize) -> String {
    const TABLE: &[(usize, &str)] = &[(10, "X"), (9, "IX"), (5, "V"), (4, "IV"), (1, "I")];
    let mut n = n;
    let mut s = String::new();
    for &(v, r) in TABLE {
        while n >= v {
            s.push_str(r);
            n -= v;
        }
    }
    s
}

#[derive(Clone, Copy)]
enum PagePlan {
    Prose,
    CaptionAbove,
    CaptionBelow,
    EdgeTop,
    EdgeBottom,
}

pub fn generate_document(cfg: &SynthConfig, index: usize) -> SynthDocument {
    let doc_id = format!("synth-{index:04}");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ index as u64);
    let n_pages = rng.gen_range(cfg.min_pages..=cfg.max_pages.max(cfg.min_pages));
    let mut doc = SynthDocument {
        chars: PdfDocument {
            doc_id: doc_id.clone(),
            pages: Vec::new(),
        },
        pages: Vec::new(),
        roles: Vec::new(),
        captions: Vec::new(),
    };
    let mut table_no = 0;
    for page in 0..n_pages {
        let plan = if rng.gen_bool(cfg.no_table_rate) {
            PagePlan::Prose
        } else if rng.gen_bool(cfg.edge_caption_rate) {
            if rng.gen_bool(0.5) {
                PagePlan::EdgeTop
            } else {
                PagePlan::EdgeBottom
            }
        } else if rng.gen_bool(0.7) {
            PagePlan::CaptionAbove
        } else {
            PagePlan::CaptionBelow
        };
        let mut b = PageBuilder {
            doc_id: &doc_id,
            page,
            chars: Vec::new(),
            lines: Vec::new(),
            roles: Vec::new(),
        };
        let rows = rng.gen_range(MIN_TABLE_ROWS..=MAX_TABLE_ROWS);
        let mut caption_at = None;
        match plan {
            PagePlan::Prose => {
                let n = rng.gen_range(20..=MAX_LINES);
                b.prose(&mut rng, n, cfg);
            }
            PagePlan::CaptionAbove | PagePlan::CaptionBelow => {
                table_no += 1;
                let before = rng.gen_range(MIN_PROSE_CONTEXT..=16);
                let after_max = MAX_LINES - before - rows - 1;
                let after = rng.gen_range(0..=after_max.min(16));
                if let PagePlan::CaptionAbove = plan {
                    b.prose(&mut rng, before, cfg);
                    caption_at = Some((b.lines.len(), CaptionPlacement::Interior));
                    b.caption(&mut rng, table_no, cfg);
                    b.table(&mut rng, rows, cfg);
                    b.prose(&mut rng, after, cfg);
                } else {
                    b.prose(&mut rng, after, cfg);
                    b.table(&mut rng, rows, cfg);
                    caption_at = Some((b.lines.len(), CaptionPlacement::Interior));
                    b.caption(&mut rng, table_no, cfg);
                    b.prose(&mut rng, before, cfg);
                }
            }
            PagePlan::EdgeTop => {
                table_no += 1;
                caption_at = Some((0, CaptionPlacement::Edge));
                b.caption(&mut rng, table_no, cfg);
                b.table(&mut rng, rows, cfg);
                let n = rng.gen_range(MIN_PROSE_CONTEXT..=20);
                b.prose(&mut rng, n, cfg);
            }
            PagePlan::EdgeBottom => {
                table_no += 1;
                let n = rng.gen_range(MIN_PROSE_CONTEXT..=20);
                b.prose(&mut rng, n, cfg);
                b.table(&mut rng, rows, cfg);
                caption_at = Some((b.lines.len(), CaptionPlacement::Edge));
                b.caption(&mut rng, table_no, cfg);
            }
        }
        if let Some((line_idx, placement)) = caption_at {
            doc.captions.push(SynthCaption {
                page,
                line_idx,
                placement,
            });
        }
        doc.chars.pages.push(Page {
            width: PAGE_WIDTH,
            height: PAGE_HEIGHT,
            chars: b.chars,
        });
        doc.pages.push(b.lines);
        doc.roles.push(b.roles);
    }
    doc
}

pub fn generate(cfg: &SynthConfig) -> Vec<SynthDocument> {
    (0..cfg.docs)
        .into_par_iter()
        .map(|i| generate_document(cfg, i))
        .collect()
}

/// Writes `lines/`, `labels/` (gold), optionally `chars/`, and the manifest
/// under `out`.
pub fn write_corpus(cfg: &SynthConfig, out: &Path) -> Result<SynthStats, CorpusError> {
    let io = |path: &Path| {
        let path = path.to_owned();
        move |source| CorpusError::Io { path, source }
    };
    let mut dirs = vec![LINES_DIR, LABELS_DIR];
    if cfg.write_chars {
        dirs.push(CHARS_DIR);
    }
    for d in &dirs {
        let p = out.join(d);
        std::fs::create_dir_all(&p).map_err(io(&p))?;
    }
    let docs = generate(cfg);
    docs.par_iter().try_for_each(|doc| -> Result<(), CorpusError> {
        let name = format!("{}.jsonl", doc.chars.doc_id);
        let p = out.join(LINES_DIR).join(&name);
        let f = BufWriter::new(File::create(&p).map_err(io(&p))?);
        write_lines_jsonl(doc.pages.iter().flatten(), f).map_err(io(&p))?;
        let p = out.join(LABELS_DIR).join(&name);
        let f = BufWriter::new(File::create(&p).map_err(io(&p))?);
        write_labeled_jsonl(&doc.gold(), f).map_err(io(&p))?;
        if cfg.write_chars {
            let p = out.join(CHARS_DIR).join(&name);
            let f = BufWriter::new(File::create(&p).map_err(io(&p))?);
            write_richchar_jsonl(&doc.chars, f).map_err(io(&p))?;
        }
        Ok(())
    })?;
    build_manifest(out, cfg.split_ratio, cfg.seed)?.save(out)?;
    Ok(stats(&docs))
}

pub fn stats(docs: &[SynthDocument]) -> SynthStats {
    let mut s = SynthStats {
        docs: docs.len(),
        ..Default::default()
    };
    for d in docs {
        s.pages += d.pages.len();
        s.lines += d.pages.iter().map(Vec::len).sum::<usize>();
        s.table_lines += d.roles.iter().flatten().filter(|r| r.gold().is_table()).count();
        s.captions += d.captions.len();
        s.interior_captions += d
            .captions
            .iter()
            .filter(|c| c.placement == CaptionPlacement::Interior)
            .count();
        s.edge_captions += d
            .captions
            .iter()
            .filter(|c| c.placement == CaptionPlacement::Edge)
            .count();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::features::raw_margin;
    use crate::layout::{assemble_lines, LayoutConfig};

    #[test]
    fn deterministic() {
        let cfg = SynthConfig::default();
        assert_eq!(generate(&cfg), generate(&cfg));
        let other = SynthConfig {
            seed: 8,
            ..cfg.clone()
        };
        assert_ne!(generate(&cfg), generate(&other));
    }

    #[test]
    fn chars_reassemble_into_lines() {
        for doc in generate(&SynthConfig::default()) {
            assert_eq!(assemble_lines(&doc.chars, &LayoutConfig::default()), doc.pages);
            assert!(doc.chars.validate().is_ok());
        }
    }

    #[test]
    fn table_rows_have_wider_margins() {
        let cfg = SynthConfig::default();
        for doc in generate(&cfg) {
            for (lines, roles) in doc.pages.iter().zip(&doc.roles) {
                for (l, r) in lines.iter().zip(roles) {
                    let m = raw_margin(l);
                    match r {
                        LineRole::Header | LineRole::Row => assert!(m >= cfg.table_gap, "{m}"),
                        _ if l.words.len() > 1 => {
                            assert!(m <= cfg.prose_gap * (1.0 + cfg.jitter) + 1e-9, "{m}")
                        }
                        _ => {}
                    }
                }
            }
        }
    }

    #[test]
    fn layout_invariants_and_caption_positions() {
        for doc in generate(&SynthConfig {
            docs: 30,
            ..Default::default()
        }) {
            for lines in &doc.pages {
                assert!(lines.len() <= MAX_LINES);
                for l in lines {
                    assert!(l.validate().is_ok());
                    assert!(l.words.last().unwrap().x1 <= PAGE_WIDTH);
                }
            }
            for c in &doc.captions {
                assert_eq!(doc.roles[c.page][c.line_idx], LineRole::Caption);
                let n = doc.pages[c.page].len();
                let edge = c.line_idx == 0 || c.line_idx == n - 1;
                assert_eq!(edge, c.placement == CaptionPlacement::Edge);
            }
        }
    }

    #[test]
    fn roman_numerals() {
        assert_eq!(roman(4), "IV");
        assert_eq!(roman(14), "XIV");
    }
}
