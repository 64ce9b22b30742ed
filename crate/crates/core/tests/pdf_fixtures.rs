//! Parser output on the PDF fixtures, checked against per-character
//! references dumped once from pdfminer.six (tools/pdfminer_reference.py).

use std::path::{Path, PathBuf};

use serde::Deserialize;
use tablescout::ingest::{parse_pdf, IngestError, PdfDocument};
use tablescout::layout::{assemble_lines, LayoutConfig};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn parse(name: &str) -> Result<PdfDocument, IngestError> {
    parse_pdf(&std::fs::read(fixture(name)).unwrap())
}

#[derive(Deserialize)]
struct RefPage {
    width: f64,
    height: f64,
    chars: Vec<RefChar>,
}

#[derive(Deserialize)]
struct RefChar {
    char: String,
    x: f64,
    y: f64,
    size: f64,
    adv: f64,
}

fn check_against_reference(pdf: &str) {
    let doc = parse(pdf).unwrap();
    let stem = pdf.trim_end_matches(".pdf");
    let text = std::fs::read_to_string(fixture(&format!("{stem}.reference.json"))).unwrap();
    let reference: Vec<RefPage> = serde_json::from_str(&text).unwrap();
    assert_eq!(doc.pages.len(), reference.len());
    for (page, want) in doc.pages.iter().zip(&reference) {
        assert_eq!((page.width, page.height), (want.width, want.height));
        let mut got: Vec<_> = page.chars.iter().collect();
        got.sort_by(|a, b| b.y.total_cmp(&a.y).then(a.x.total_cmp(&b.x)));
        assert_eq!(got.len(), want.chars.len(), "{pdf}: char count");
        for (g, w) in got.iter().zip(&want.chars) {
            assert_eq!(g.codepoint.to_string(), w.char, "{pdf} at ({}, {})", w.x, w.y);
            assert!(
                (g.x - w.x).abs() < 1e-4,
                "{pdf} {:?}: x {} vs {}",
                w.char,
                g.x,
                w.x
            );
            assert!(
                (g.y - w.y).abs() < 1e-4,
                "{pdf} {:?}: y {} vs {}",
                w.char,
                g.y,
                w.y
            );
            assert!((g.font_size - w.size).abs() < 1e-6);
            let adv = g.advance.expect("core fonts have widths");
            assert!(
                (adv - w.adv).abs() < 1e-4,
                "{pdf} {:?}: advance {adv} vs {}",
                w.char,
                w.adv
            );
        }
    }
}

#[test]
fn ab_at_text_matrix_origin() {
    let doc = parse("ab.pdf").unwrap();
    assert_eq!(doc.pages.len(), 1);
    let chars = &doc.pages[0].chars;
    assert_eq!(chars.len(), 2);
    assert_eq!((chars[0].codepoint, chars[0].x, chars[0].y), ('A', 100.0, 700.0));
    assert_eq!(chars[1].codepoint, 'B');
    assert!(chars.iter().all(|c| c.font_size == 12.0 && c.page == 0));
    assert!((chars[1].x - 108.004).abs() < 1e-9);
}

#[test]
fn matches_reference_extractor() {
    for pdf in ["ab.pdf", "ab_flate.pdf", "report.pdf"] {
        check_against_reference(pdf);
    }
}

#[test]
fn empty_page_has_no_chars() {
    let doc = parse("empty_page.pdf").unwrap();
    assert_eq!(doc.pages.len(), 1);
    assert!(doc.pages[0].chars.is_empty());
    assert_eq!((doc.pages[0].width, doc.pages[0].height), (612.0, 792.0));
}

#[test]
fn jpx_content_stream_is_unsupported() {
    match parse("jpx.pdf") {
        Err(IngestError::Unsupported(what)) => assert!(what.contains("JPXDecode"), "{what}"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn corrupt_file_is_malformed() {
    assert!(matches!(
        parse("corrupt.pdf"),
        Err(IngestError::MalformedPdf { .. })
    ));
}

#[test]
fn coordinates_inside_page_box() {
    for pdf in ["ab.pdf", "report.pdf"] {
        let doc = parse(pdf).unwrap();
        for p in &doc.pages {
            for c in &p.chars {
                assert!(
                    (0.0..=p.width).contains(&c.x) && (0.0..=p.height).contains(&c.y),
                    "{pdf}: {c:?}"
                );
            }
        }
    }
}

#[test]
fn report_lines() {
    let mut doc = parse("report.pdf").unwrap();
    doc.doc_id = "report".into();
    let pages = assemble_lines(&doc, &LayoutConfig::default());
    let texts: Vec<String> = pages[0].iter().map(|l| l.text()).collect();
    assert_eq!(texts.len(), 11);
    assert_eq!(texts[4], "Table 1: Results on the test set");
    assert_eq!(texts[5], "Method Accuracy Precision Recall");
    assert_eq!(texts[7], "NAM 0.5134 0.5134 1.0000");
    let row = &pages[0][6];
    let starts: Vec<f64> = row.words.iter().map(|w| w.x0).collect();
    assert_eq!(starts, vec![72.0, 182.0, 292.0, 402.0]);
    assert_eq!(row.y, 720.0 - 13.0 * 6.0);
}
