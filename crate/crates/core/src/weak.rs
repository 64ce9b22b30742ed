//! Weak labels from table captions: the lines around each caption are split
//! into the group above and the group below, and the group with wider
//! inter-word margins is taken to be the table body.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::features::compute_nam;
use crate::labels::{Label, LabelSource, LabeledLine};
use crate::layout::Line;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct WeakLabelConfig {
    /// Context window, in lines, on each side of a caption.
    pub k: usize,
    /// Smallest group that takes part in a comparison.
    pub min_group_size: usize,
    /// Line-initial words that mark a caption.
    pub indicators: Vec<String>,
}

impl Default for WeakLabelConfig {
    fn default() -> Self {
        WeakLabelConfig {
            k: 8,
            min_group_size: 2,
            indicators: vec!["Table".into(), "Tab.".into()],
        }
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum ConfigError {
    #[error("k must be at least 1")]
    ZeroK,
    #[error("min_group_size must be at least 1")]
    ZeroMinGroup,
}

impl WeakLabelConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.k == 0 {
            return Err(ConfigError::ZeroK);
        }
        if self.min_group_size == 0 {
            return Err(ConfigError::ZeroMinGroup);
        }
        Ok(())
    }

    fn is_caption(&self, line: &Line) -> bool {
        let mut words = line.words.iter().map(|w| w.text.as_str());
        let Some(first) = words.next() else {
            return false;
        };
        if !self.indicators.iter().any(|i| i == first) {
            return false;
        }
        match words.next() {
            None => true,
            Some(next) => starts_with_numeral(next),
        }
    }
}

fn starts_with_numeral(word: &str) -> bool {
    if word.starts_with(|c: char| c.is_ascii_digit()) {
        return true;
    }
    let roman: String = word.chars().take_while(|c| "IVXLCDM".contains(*c)).collect();
    !roman.is_empty() && word[roman.len()..].chars().all(|c| c.is_ascii_punctuation())
}

/// Positions of caption lines on a page, ascending.
pub fn find_caption_lines(page_lines: &[Line], config: &WeakLabelConfig) -> Vec<usize> {
    page_lines
        .iter()
        .enumerate()
        .filter(|(_, l)| config.is_caption(l))
        .map(|(i, _)| i)
        .collect()
}

/// Up to `k` lines directly above and below the caption at `caption`.
pub fn extract_context_groups<'a>(
    page_lines: &'a [Line],
    caption: usize,
    config: &WeakLabelConfig,
) -> (&'a [Line], &'a [Line]) {
    let up = &page_lines[caption.saturating_sub(config.k)..caption];
    let end = (caption + 1 + config.k).min(page_lines.len());
    let down = &page_lines[(caption + 1).min(end)..end];
    (up, down)
}

fn mean_nam(group: &[Line], page_lines: &[Line]) -> f64 {
    group.iter().map(|l| compute_nam(l, page_lines)).sum::<f64>() / group.len() as f64
}

/// Labels the group with the larger mean NAM as table lines and the other
/// as non-table lines. Returns nothing on a tie or when a group is too small.
pub fn label_groups(
    up: &[Line],
    down: &[Line],
    page_lines: &[Line],
    caption: (usize, usize),
    config: &WeakLabelConfig,
) -> Vec<LabeledLine> {
    if up.len() < config.min_group_size || down.len() < config.min_group_size {
        return Vec::new();
    }
    let (m_up, m_down) = (mean_nam(up, page_lines), mean_nam(down, page_lines));
    if m_up == m_down {
        return Vec::new();
    }
    let up_label = Label::from_sign(m_up > m_down);
    let emit = |lines: &[Line], label: Label| {
        lines
            .iter()
            .map(|l| LabeledLine {
                line: l.clone(),
                label,
                source: LabelSource::Weak,
                caption: Some(caption),
            })
            .collect::<Vec<_>>()
    };
    let mut out = emit(up, up_label);
    out.extend(emit(down, up_label.flip()));
    out
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct WeakLabelStats {
    pub documents: usize,
    pub captions: usize,
    pub skipped_captions: usize,
    pub positives: usize,
    pub negatives: usize,
}

impl WeakLabelStats {
    pub fn merge(&mut self, other: &WeakLabelStats) {
        self.documents += other.documents;
        self.captions += other.captions;
        self.skipped_captions += other.skipped_captions;
        self.positives += other.positives;
        self.negatives += other.negatives;
    }
}

/// Weak labels for every caption on every page of one document.
pub fn weak_label_document(
    pages: &[Vec<Line>],
    config: &WeakLabelConfig,
) -> (Vec<LabeledLine>, WeakLabelStats) {
    let mut out = Vec::new();
    let mut stats = WeakLabelStats {
        documents: 1,
        ..Default::default()
    };
    for page in pages {
        for c in find_caption_lines(page, config) {
            stats.captions += 1;
            let (up, down) = extract_context_groups(page, c, config);
            let labeled = label_groups(up, down, page, (page[c].page, page[c].line_idx), config);
            if labeled.is_empty() {
                stats.skipped_captions += 1;
            }
            for l in &labeled {
                if l.label.is_table() {
                    stats.positives += 1;
                } else {
                    stats.negatives += 1;
                }
            }
            out.extend(labeled);
        }
    }
    (out, stats)
}

/// Labels a sequence of documents in order. Documents that failed to load
/// are passed to `on_error` and skipped.
pub fn weak_label_corpus<E>(
    docs: impl IntoIterator<Item = Result<Vec<Vec<Line>>, E>>,
    config: &WeakLabelConfig,
    mut on_error: impl FnMut(E),
) -> (Vec<LabeledLine>, WeakLabelStats) {
    let mut out = Vec::new();
    let mut stats = WeakLabelStats::default();
    for doc in docs {
        match doc {
            Ok(pages) => {
                let (labeled, s) = weak_label_document(&pages, config);
                out.extend(labeled);
                stats.merge(&s);
            }
            Err(e) => on_error(e),
        }
    }
    (out, stats)
}
