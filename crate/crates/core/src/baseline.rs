//! Unsupervised sparse-line baseline: a line is table-like when it is much
//! narrower than the document's average line or contains an unusually wide
//! gap between words.

use serde::{Deserialize, Serialize};

use crate::labels::{Label, LabelSource, LabeledLine};
use crate::layout::{word_margins, Line};
use crate::weak::{find_caption_lines, WeakLabelConfig};

/// Runs of sparse lines shorter than this are dropped unless they touch a
/// caption.
pub const MIN_RUN: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DocumentStats {
    pub avg_line_width: f64,
    pub avg_word_gap: f64,
}

pub fn compute_document_stats<'a>(lines: impl IntoIterator<Item = &'a Line>) -> DocumentStats {
    let (mut widths, mut n_lines) = (0.0, 0usize);
    let (mut gaps, mut n_gaps) = (0.0, 0usize);
    for l in lines {
        widths += l.width();
        n_lines += 1;
        for g in word_margins(l) {
            gaps += g;
            n_gaps += 1;
        }
    }
    let mean = |s: f64, n: usize| if n == 0 { 0.0 } else { s / n as f64 };
    DocumentStats {
        avg_line_width: mean(widths, n_lines),
        avg_word_gap: mean(gaps, n_gaps),
    }
}

pub fn is_sparse_line(line: &Line, stats: &DocumentStats) -> bool {
    3.0 * line.width() < 2.0 * stats.avg_line_width
        || word_margins(line)
            .into_iter()
            .any(|g| g > 2.0 * stats.avg_word_gap)
}

/// Labels for every line of a document, page by page.
pub fn heuristic_predict(pages: &[Vec<Line>]) -> Vec<Vec<Label>> {
    let stats = compute_document_stats(pages.iter().flatten());
    let captions = WeakLabelConfig::default();
    pages
        .iter()
        .map(|page| {
            let mut labels: Vec<Label> = page
                .iter()
                .map(|l| Label::from_sign(is_sparse_line(l, &stats)))
                .collect();
            let is_caption = {
                let mut v = vec![false; page.len()];
                for c in find_caption_lines(page, &captions) {
                    v[c] = true;
                }
                v
            };
            let mut i = 0;
            while i < labels.len() {
                if !labels[i].is_table() {
                    i += 1;
                    continue;
                }
                let mut j = i;
                while j < labels.len() && labels[j].is_table() {
                    j += 1;
                }
                let touches_caption = (i > 0 && is_caption[i - 1])
                    || (j < page.len() && is_caption[j])
                    || is_caption[i..j].iter().any(|c| *c);
                if j - i < MIN_RUN && !touches_caption {
                    labels[i..j].fill(Label::NonTable);
                }
                i = j;
            }
            labels
        })
        .collect()
}

/// [`heuristic_predict`] as labeled-line records.
pub fn heuristic_labeled(pages: &[Vec<Line>]) -> Vec<LabeledLine> {
    heuristic_predict(pages)
        .into_iter()
        .zip(pages)
        .flat_map(|(labels, page)| {
            labels.into_iter().zip(page).map(|(label, line)| LabeledLine {
                line: line.clone(),
                label,
                source: LabelSource::Baseline,
                caption: None,
            })
        })
        .collect()
}
