//! Labeled-lines records: a line plus a table/non-table label and where the
//! label came from.

use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::jsonl::{self, JsonlError};
use crate::layout::{Line, LineKey};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "i64")]
pub enum Label {
    Table,
    NonTable,
}

impl Label {
    pub fn from_sign(positive: bool) -> Label {
        if positive {
            Label::Table
        } else {
            Label::NonTable
        }
    }

    pub fn is_table(self) -> bool {
        self == Label::Table
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Label::Table => 1,
            Label::NonTable => -1,
        }
    }

    pub fn as_f64(self) -> f64 {
        self.as_i64() as f64
    }

    pub fn flip(self) -> Label {
        Label::from_sign(!self.is_table())
    }
}

impl TryFrom<i64> for Label {
    type Error = String;

    fn try_from(v: i64) -> Result<Self, String> {
        match v {
            1 => Ok(Label::Table),
            -1 => Ok(Label::NonTable),
            other => Err(format!("label must be 1 or -1, got {other}")),
        }
    }
}

impl From<Label> for i64 {
    fn from(l: Label) -> i64 {
        l.as_i64()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LabelSource {
    Weak,
    Gold,
    Baseline,
    Ensemble,
    Lr,
    Svm,
    Nb,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabeledLine {
    #[serde(flatten)]
    pub line: Line,
    pub label: Label,
    pub source: LabelSource,
    /// `(page, line_idx)` of the caption that produced a weak label.
    pub caption: Option<(usize, usize)>,
}

impl LabeledLine {
    pub fn key(&self) -> LineKey {
        self.line.key()
    }
}

/// Key and label only; any labeled-lines record also parses as one.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabelRecord {
    pub doc_id: String,
    pub page: usize,
    pub line_idx: usize,
    pub label: Label,
    pub source: LabelSource,
}

impl LabelRecord {
    pub fn key(&self) -> LineKey {
        LineKey {
            doc_id: self.doc_id.clone(),
            page: self.page,
            line_idx: self.line_idx,
        }
    }
}

pub fn read_labeled_jsonl<R: BufRead>(input: R) -> impl Iterator<Item = Result<LabeledLine, JsonlError>> {
    jsonl::records(input)
}

pub fn write_labeled_jsonl<'a, W: Write>(
    lines: impl IntoIterator<Item = &'a LabeledLine>,
    mut out: W,
) -> std::io::Result<()> {
    for l in lines {
        jsonl::write_record(&mut out, l)?;
    }
    Ok(())
}
