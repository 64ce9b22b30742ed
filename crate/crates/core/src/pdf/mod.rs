//! A PDF reader for the subset needed to recover positioned text: the
//! classic and object-stream file layouts, Flate/ASCII filters, simple and
//! Identity-H fonts, and the text operators.

mod content;
mod file;
mod font;
mod font_tables;
mod lexer;

use crate::ingest::{IngestError, Page, PdfDocument};

/// Parses PDF bytes into per-page rich characters in content-stream order.
///
/// The returned document has an empty `doc_id`; callers assign one.
pub fn parse_pdf(bytes: &[u8]) -> Result<PdfDocument, IngestError> {
    let file = file::PdfFile::parse(bytes)?;
    let mut pages = Vec::new();
    for (index, node) in file.pages()?.iter().enumerate() {
        let [x0, y0, x1, y1] = node.media_box;
        let (width, height) = (x1 - x0, y1 - y0);
        if !(width > 0.0 && height > 0.0) {
            return Err(IngestError::MalformedPdf {
                offset: 0,
                reason: format!("page {index} has an empty MediaBox"),
            });
        }
        let data = file.page_content(node)?;
        let mut interp = content::Interpreter::new(&file, index);
        interp.run(&data, &node.resources)?;
        pages.push(Page {
            width,
            height,
            chars: interp.chars,
        });
    }
    Ok(PdfDocument {
        doc_id: String::new(),
        pages,
    })
}
