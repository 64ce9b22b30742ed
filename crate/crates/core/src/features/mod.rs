//! Per-line feature vectors: normalized average margin (1 dim), POS tag
//! distribution (5 dims) and named-entity percentages (5 dims).

pub mod ne;
pub mod pos;

use std::collections::HashMap;
use std::io::BufRead;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::jsonl::{self, JsonlError};
use crate::layout::{word_margins, Line, LineKey};
pub use ne::{NeTag, NeTagger};
pub use pos::{Pos, PosTagger};

pub const FEATURE_DIMS: usize = 11;

/// Names of the eleven dimensions, in vector order.
pub const FEATURE_NAMES: [&str; FEATURE_DIMS] = [
    "nam",
    "ptd_nn",
    "ptd_vb",
    "ptd_jj",
    "ptd_rb",
    "ptd_others",
    "nep_person",
    "nep_location",
    "nep_organization",
    "nep_number",
    "nep_time",
];

/// NAM values are snapped to this grid so that rescaling a page does not
/// perturb them by rounding noise.
const NAM_GRID: f64 = (1u64 << 30) as f64;

#[derive(Debug, Error, PartialEq)]
pub enum FeatureError {
    #[error("annotation has {got} tags for a line with {expected} tokens")]
    AnnotationLengthMismatch { expected: usize, got: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct FeatureVector {
    pub nam: f64,
    pub ptd: [f64; 5],
    pub nep: [f64; 5],
}

impl FeatureVector {
    pub fn to_array(&self) -> [f64; FEATURE_DIMS] {
        let mut out = [0.0; FEATURE_DIMS];
        out[0] = self.nam;
        out[1..6].copy_from_slice(&self.ptd);
        out[6..11].copy_from_slice(&self.nep);
        out
    }

    pub fn from_array(v: &[f64; FEATURE_DIMS]) -> Self {
        let mut ptd = [0.0; 5];
        let mut nep = [0.0; 5];
        ptd.copy_from_slice(&v[1..6]);
        nep.copy_from_slice(&v[6..11]);
        FeatureVector { nam: v[0], ptd, nep }
    }
}

/// Which feature families a model sees.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum FeatureMask {
    Nam,
    NamPtd,
    #[default]
    All,
}

impl FeatureMask {
    pub fn dims(self) -> &'static [usize] {
        const ALL: [usize; FEATURE_DIMS] = [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10];
        match self {
            FeatureMask::Nam => &ALL[..1],
            FeatureMask::NamPtd => &ALL[..6],
            FeatureMask::All => &ALL,
        }
    }

    pub fn project(self, x: &FeatureVector) -> Vec<f64> {
        let full = x.to_array();
        self.dims().iter().map(|&d| full[d]).collect()
    }

    pub fn as_str(self) -> &'static str {
        match self {
            FeatureMask::Nam => "nam",
            FeatureMask::NamPtd => "nam+ptd",
            FeatureMask::All => "nam+ptd+nep",
        }
    }
}

impl std::str::FromStr for FeatureMask {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "nam" => Ok(FeatureMask::Nam),
            "nam+ptd" => Ok(FeatureMask::NamPtd),
            "nam+ptd+nep" | "all" => Ok(FeatureMask::All),
            other => Err(format!(
                "unknown feature set {other:?} (nam, nam+ptd, nam+ptd+nep)"
            )),
        }
    }
}

impl Serialize for FeatureMask {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for FeatureMask {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Mean inter-word margin of a line; 0 for single-word lines.
pub fn raw_margin(line: &Line) -> f64 {
    let m = word_margins(line);
    if m.is_empty() {
        0.0
    } else {
        m.iter().sum::<f64>() / m.len() as f64
    }
}

fn page_max_margin(page_lines: &[Line]) -> f64 {
    page_lines
        .iter()
        .filter(|l| l.words.len() > 1)
        .map(raw_margin)
        .fold(0.0, f64::max)
}

fn normalize(raw: f64, max: f64) -> f64 {
    if max > 0.0 {
        ((raw / max).clamp(0.0, 1.0) * NAM_GRID).round() / NAM_GRID
    } else {
        0.0
    }
}

/// Average margin of `line` divided by the largest average margin on its
/// page.
pub fn compute_nam(line: &Line, page_lines: &[Line]) -> f64 {
    normalize(raw_margin(line), page_max_margin(page_lines))
}

pub fn pos_distribution(tags: &[Pos]) -> [f64; 5] {
    if tags.is_empty() {
        return [0.0, 0.0, 0.0, 0.0, 1.0];
    }
    let mut counts = [0usize; 5];
    for t in tags {
        counts[t.index()] += 1;
    }
    counts.map(|c| c as f64 / tags.len() as f64)
}

pub fn ne_percentage(tags: &[NeTag]) -> [f64; 5] {
    let mut counts = [0usize; 5];
    for t in tags {
        if let Some(i) = t.index() {
            counts[i] += 1;
        }
    }
    if tags.is_empty() {
        return [0.0; 5];
    }
    counts.map(|c| c as f64 / tags.len() as f64)
}

/// Externally produced tags for one line.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LineAnnotation {
    pub doc_id: String,
    pub page: usize,
    pub line_idx: usize,
    pub pos: Vec<Pos>,
    pub ne: Vec<NeTag>,
}

impl LineAnnotation {
    pub fn key(&self) -> LineKey {
        LineKey {
            doc_id: self.doc_id.clone(),
            page: self.page,
            line_idx: self.line_idx,
        }
    }
}

pub fn read_annotations<R: BufRead>(input: R) -> Result<HashMap<LineKey, LineAnnotation>, JsonlError> {
    let mut out = HashMap::new();
    for rec in jsonl::records::<LineAnnotation, _>(input) {
        let rec = rec?;
        out.insert(rec.key(), rec);
    }
    Ok(out)
}

/// A line's feature vector restricted to one feature set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureRecord {
    pub doc_id: String,
    pub page: usize,
    pub line_idx: usize,
    pub features: FeatureMask,
    pub x: Vec<f64>,
}

impl FeatureRecord {
    pub fn new(line: &Line, mask: FeatureMask, v: &FeatureVector) -> Self {
        FeatureRecord {
            doc_id: line.doc_id.clone(),
            page: line.page,
            line_idx: line.line_idx,
            features: mask,
            x: mask.project(v),
        }
    }

    pub fn key(&self) -> LineKey {
        LineKey {
            doc_id: self.doc_id.clone(),
            page: self.page,
            line_idx: self.line_idx,
        }
    }

    /// The leading dimensions for `mask`, or `None` when this record
    /// carries fewer.
    pub fn project(&self, mask: FeatureMask) -> Option<&[f64]> {
        let n = mask.dims().len();
        (self.features.dims().len() >= n && self.x.len() == self.features.dims().len()).then(|| &self.x[..n])
    }
}

/// Computes feature vectors with the built-in taggers or supplied tags.
#[derive(Debug, Clone, Copy)]
pub struct Featurizer<'a> {
    pub pos: &'a PosTagger,
    pub ne: &'a NeTagger,
}

impl Default for Featurizer<'static> {
    fn default() -> Self {
        Featurizer {
            pos: PosTagger::builtin(),
            ne: NeTagger::builtin(),
        }
    }
}

impl Featurizer<'_> {
    pub fn featurize(
        &self,
        line: &Line,
        page_lines: &[Line],
        annotation: Option<&LineAnnotation>,
    ) -> Result<FeatureVector, FeatureError> {
        self.featurize_with_max(line, page_max_margin(page_lines), annotation)
    }

    fn featurize_with_max(
        &self,
        line: &Line,
        page_max: f64,
        annotation: Option<&LineAnnotation>,
    ) -> Result<FeatureVector, FeatureError> {
        let tokens = line.tokens();
        let (ptd, nep) = match annotation {
            Some(a) => {
                for got in [a.pos.len(), a.ne.len()] {
                    if got != tokens.len() {
                        return Err(FeatureError::AnnotationLengthMismatch {
                            expected: tokens.len(),
                            got,
                        });
                    }
                }
                (pos_distribution(&a.pos), ne_percentage(&a.ne))
            }
            None => (
                pos_distribution(&self.pos.tag(&tokens)),
                ne_percentage(&self.ne.tag(&tokens)),
            ),
        };
        Ok(FeatureVector {
            nam: normalize(raw_margin(line), page_max),
            ptd,
            nep,
        })
    }

    /// Featurizes every line of a page, computing the page statistics once.
    pub fn featurize_page(
        &self,
        page_lines: &[Line],
        annotations: Option<&HashMap<LineKey, LineAnnotation>>,
    ) -> Result<Vec<FeatureVector>, FeatureError> {
        let max = page_max_margin(page_lines);
        page_lines
            .iter()
            .map(|l| self.featurize_with_max(l, max, annotations.and_then(|a| a.get(&l.key()))))
            .collect()
    }
}

/// Featurizes with the built-in taggers.
pub fn featurize(
    line: &Line,
    page_lines: &[Line],
    annotation: Option<&LineAnnotation>,
) -> Result<FeatureVector, FeatureError> {
    Featurizer::default().featurize(line, page_lines, annotation)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layout::Word;

    fn line(idx: usize, words: &[(&str, f64, f64)]) -> Line {
        Line {
            doc_id: "d".into(),
            page: 0,
            line_idx: idx,
            y: 700.0 - idx as f64 * 12.0,
            dominant_font_size: 10.0,
            words: words
                .iter()
                .map(|&(t, x0, x1)| Word {
                    text: t.into(),
                    x0,
                    x1,
                })
                .collect(),
        }
    }

    #[test]
    fn nam_is_max_normalized() {
        let page = vec![
            line(0, &[("a", 0.0, 10.0), ("b", 12.0, 20.0)]),
            line(1, &[("c", 0.0, 10.0), ("d", 18.0, 30.0)]),
        ];
        assert_eq!(compute_nam(&page[0], &page), 0.25);
        assert_eq!(compute_nam(&page[1], &page), 1.0);
    }

    #[test]
    fn single_word_line_has_zero_nam() {
        let page = vec![
            line(0, &[("Results", 0.0, 30.0)]),
            line(1, &[("a", 0.0, 1.0), ("b", 5.0, 6.0)]),
        ];
        assert_eq!(compute_nam(&page[0], &page), 0.0);
        let alone = vec![line(0, &[("Results", 0.0, 30.0)])];
        assert_eq!(compute_nam(&alone[0], &alone), 0.0);
    }

    #[test]
    fn distributions() {
        use NeTag::*;
        use Pos::*;
        assert_eq!(
            pos_distribution(&[NN, NN, VB, OTHERS]),
            [0.5, 0.25, 0.0, 0.0, 0.25]
        );
        assert_eq!(pos_distribution(&[NN, NN]), [1.0, 0.0, 0.0, 0.0, 0.0]);
        assert_eq!(pos_distribution(&[]), [0.0, 0.0, 0.0, 0.0, 1.0]);
        assert_eq!(
            ne_percentage(&[NUMBER, NUMBER, NONE, NONE]),
            [0.0, 0.0, 0.0, 0.5, 0.0]
        );
        assert_eq!(ne_percentage(&[NONE, NONE]), [0.0; 5]);
        assert_eq!(ne_percentage(&[PERSON, TIME]), [0.5, 0.0, 0.0, 0.0, 0.5]);
        assert_eq!(ne_percentage(&[]), [0.0; 5]);
    }

    #[test]
    fn featurize_single_word_with_annotations() {
        let page = vec![line(0, &[("Results", 0.0, 30.0)])];
        let ann = LineAnnotation {
            doc_id: "d".into(),
            page: 0,
            line_idx: 0,
            pos: vec![Pos::NN],
            ne: vec![NeTag::NONE],
        };
        let fv = featurize(&page[0], &page, Some(&ann)).unwrap();
        assert_eq!(
            fv,
            FeatureVector {
                nam: 0.0,
                ptd: [1.0, 0.0, 0.0, 0.0, 0.0],
                nep: [0.0; 5]
            }
        );
    }

    #[test]
    fn featurize_numeric_max_margin_line() {
        let page = vec![
            line(
                0,
                &[("the", 0.0, 15.0), ("model", 17.0, 40.0), ("works", 42.0, 60.0)],
            ),
            line(
                1,
                &[("0.71", 0.0, 20.0), ("82.3", 60.0, 80.0), ("12", 120.0, 130.0)],
            ),
        ];
        let fv = featurize(&page[1], &page, None).unwrap();
        assert_eq!(fv.nam, 1.0);
        assert_eq!(fv.nep[3], 1.0);
        assert_eq!(fv.ptd[4], 1.0);
    }

    #[test]
    fn annotation_length_mismatch() {
        let page = vec![line(0, &[("a", 0.0, 1.0), ("b", 3.0, 4.0)])];
        let ann = LineAnnotation {
            doc_id: "d".into(),
            page: 0,
            line_idx: 0,
            pos: vec![Pos::NN],
            ne: vec![NeTag::NONE, NeTag::NONE],
        };
        assert_eq!(
            featurize(&page[0], &page, Some(&ann)),
            Err(FeatureError::AnnotationLengthMismatch { expected: 2, got: 1 })
        );
    }

    #[test]
    fn mask_projection() {
        let fv = FeatureVector::from_array(&[0.5, 0.1, 0.2, 0.3, 0.4, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0]);
        assert_eq!(FeatureMask::Nam.project(&fv), vec![0.5]);
        assert_eq!(FeatureMask::NamPtd.project(&fv).len(), 6);
        assert_eq!(FeatureMask::All.project(&fv), fv.to_array().to_vec());
        assert_eq!("nam+ptd".parse::<FeatureMask>().unwrap(), FeatureMask::NamPtd);
    }
}
