//! Rich characters, documents, and the rich-character JSONL interchange
//! format.
//!
//! The interchange file starts with a header record
//! `{"doc_id": .., "pages": [{"w": .., "h": ..}, ..]}` followed by one
//! record per character: `{"page", "char", "x", "y", "font", "size"}` and an
//! optional advance width `"w"`. Coordinates are PDF user space with the
//! origin at the bottom-left of the page.

use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use crate::pdf::parse_pdf;

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("unsupported PDF feature: {0}")]
    Unsupported(String),
    #[error("malformed PDF at byte {offset}: {reason}")]
    MalformedPdf { offset: usize, reason: String },
    #[error("encrypted PDF documents are not supported")]
    EncryptedPdf,
    #[error("line {line}: {message}")]
    Schema { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// One extracted glyph.
#[derive(Debug, Clone, PartialEq)]
pub struct RichChar {
    pub codepoint: char,
    pub page: usize,
    pub x: f64,
    pub y: f64,
    pub font_name: String,
    pub font_size: f64,
    /// Horizontal advance in user-space units, when the producer knows it.
    pub advance: Option<f64>,
}

impl RichChar {
    /// Right edge of the glyph box. Without a known advance the glyph is
    /// assumed to be half an em wide.
    pub fn right(&self) -> f64 {
        self.x + self.advance.unwrap_or(0.5 * self.font_size)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Page {
    pub width: f64,
    pub height: f64,
    pub chars: Vec<RichChar>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PdfDocument {
    pub doc_id: String,
    pub pages: Vec<Page>,
}

impl PdfDocument {
    pub fn char_count(&self) -> usize {
        self.pages.iter().map(|p| p.chars.len()).sum()
    }

    /// Checks the structural invariants of a document.
    pub fn validate(&self) -> Result<(), String> {
        for (i, page) in self.pages.iter().enumerate() {
            if !(page.width > 0.0 && page.height > 0.0) {
                return Err(format!("page {i} has non-positive dimensions"));
            }
            for c in &page.chars {
                if c.page != i {
                    return Err(format!("char on page {} stored under page {i}", c.page));
                }
                if !(c.font_size > 0.0) || !c.x.is_finite() || !c.y.is_finite() {
                    return Err(format!("invalid char geometry on page {i}"));
                }
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct PageDims {
    w: f64,
    h: f64,
}

#[derive(Serialize, Deserialize)]
struct Header {
    doc_id: String,
    pages: Vec<PageDims>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CharRecord {
    page: usize,
    #[serde(rename = "char")]
    ch: String,
    x: f64,
    y: f64,
    font: String,
    size: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    w: Option<f64>,
}

pub fn write_richchar_jsonl<W: Write>(doc: &PdfDocument, mut out: W) -> std::io::Result<()> {
    let header = Header {
        doc_id: doc.doc_id.clone(),
        pages: doc
            .pages
            .iter()
            .map(|p| PageDims {
                w: p.width,
                h: p.height,
            })
            .collect(),
    };
    serde_json::to_writer(&mut out, &header)?;
    out.write_all(b"\n")?;
    for page in &doc.pages {
        for c in &page.chars {
            let rec = CharRecord {
                page: c.page,
                ch: c.codepoint.to_string(),
                x: c.x,
                y: c.y,
                font: c.font_name.clone(),
                size: c.font_size,
                w: c.advance,
            };
            serde_json::to_writer(&mut out, &rec)?;
            out.write_all(b"\n")?;
        }
    }
    Ok(())
}

pub fn read_richchar_jsonl<R: BufRead>(input: R) -> Result<PdfDocument, IngestError> {
    let mut doc: Option<PdfDocument> = None;
    for (i, line) in input.lines().enumerate() {
        let line_no = i + 1;
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let schema = |message: String| IngestError::Schema {
            line: line_no,
            message,
        };
        match doc.as_mut() {
            None => {
                let header: Header =
                    serde_json::from_str(&line).map_err(|e| schema(format!("invalid header record: {e}")))?;
                let mut pages = Vec::with_capacity(header.pages.len());
                for (p, dims) in header.pages.iter().enumerate() {
                    if !(dims.w > 0.0 && dims.h > 0.0) {
                        return Err(schema(format!("page {p} has non-positive dimensions")));
                    }
                    pages.push(Page {
                        width: dims.w,
                        height: dims.h,
                        chars: Vec::new(),
                    });
                }
                doc = Some(PdfDocument {
                    doc_id: header.doc_id,
                    pages,
                });
            }
            Some(doc) => {
                let rec: CharRecord =
                    serde_json::from_str(&line).map_err(|e| schema(format!("invalid char record: {e}")))?;
                let mut chars = rec.ch.chars();
                let (Some(codepoint), None) = (chars.next(), chars.next()) else {
                    return Err(schema("\"char\" must hold exactly one character".into()));
                };
                if !(rec.size > 0.0) {
                    return Err(schema("\"size\" must be positive".into()));
                }
                if !rec.x.is_finite() || !rec.y.is_finite() {
                    return Err(schema("coordinates must be finite".into()));
                }
                let pages = doc.pages.len();
                let page = doc
                    .pages
                    .get_mut(rec.page)
                    .ok_or_else(|| schema(format!("page {} outside {pages}-page header", rec.page)))?;
                page.chars.push(RichChar {
                    codepoint,
                    page: rec.page,
                    x: rec.x,
                    y: rec.y,
                    font_name: rec.font,
                    font_size: rec.size,
                    advance: rec.w,
                });
            }
        }
    }
    doc.ok_or(IngestError::Schema {
        line: 1,
        message: "missing header record".into(),
    })
}
