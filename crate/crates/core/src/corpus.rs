//! On-disk corpora: directory layout, manifests with a seeded train/test
//! split, and streaming access to their lines.

use std::collections::{BTreeMap, BTreeSet};
use std::fs::File;
use std::io::BufReader;
use std::path::{Path, PathBuf};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ingest::{read_richchar_jsonl, IngestError, PdfDocument};
use crate::jsonl::JsonlError;
use crate::layout::{assemble_lines, group_pages, read_lines_jsonl, LayoutConfig, Line};
use crate::pdf::parse_pdf;

pub const MANIFEST_FILE: &str = "manifest.json";
pub const PDF_DIR: &str = "pdf";
pub const CHARS_DIR: &str = "chars";
pub const LINES_DIR: &str = "lines";
pub const LABELS_DIR: &str = "labels";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Train,
    Test,
}

impl std::str::FromStr for Role {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "train" => Ok(Role::Train),
            "test" => Ok(Role::Test),
            other => Err(format!("unknown role {other:?} (train, test)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub doc_id: String,
    /// Relative to the corpus root.
    pub path: PathBuf,
    pub role: Role,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusManifest {
    pub name: String,
    pub documents: Vec<ManifestEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub line_counts: Option<BTreeMap<String, usize>>,
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("need at least 2 documents, found {0}")]
    InsufficientDocuments(usize),
    #[error("split ratio must lie in (0, 1), got {0}")]
    BadRatio(f64),
    #[error("duplicate doc_id {0:?}")]
    DuplicateDoc(String),
    #[error("{doc_id}: missing file {path}")]
    MissingFile { doc_id: String, path: PathBuf },
    #[error("{path}: {source}")]
    Ingest {
        path: PathBuf,
        #[source]
        source: IngestError,
    },
    #[error("{path}: {source}")]
    Lines {
        path: PathBuf,
        #[source]
        source: JsonlError,
    },
    #[error("malformed manifest: {0}")]
    Manifest(#[from] serde_json::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl CorpusError {
    fn io(path: &Path, source: std::io::Error) -> Self {
        CorpusError::Io {
            path: path.to_owned(),
            source,
        }
    }
}

/// Kind of document file, by directory and extension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DocFormat {
    Pdf,
    Chars,
    Lines,
}

impl DocFormat {
    pub fn of(path: &Path) -> Option<DocFormat> {
        let ext = path.extension()?.to_str()?.to_ascii_lowercase();
        if ext == "pdf" {
            return Some(DocFormat::Pdf);
        }
        if ext != "jsonl" {
            return None;
        }
        let parent = path.parent().and_then(Path::file_name).and_then(|n| n.to_str());
        Some(if parent == Some(LINES_DIR) {
            DocFormat::Lines
        } else {
            DocFormat::Chars
        })
    }
}

fn stems(dir: &Path, ext: &str) -> Result<Vec<(String, PathBuf)>, CorpusError> {
    let mut out = Vec::new();
    let entries = match std::fs::read_dir(dir) {
        Ok(e) => e,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(out),
        Err(e) => return Err(CorpusError::io(dir, e)),
    };
    for entry in entries {
        let path = entry.map_err(|e| CorpusError::io(dir, e))?.path();
        let matches = path
            .extension()
            .and_then(|e| e.to_str())
            .is_some_and(|e| e.eq_ignore_ascii_case(ext));
        if matches && path.is_file() {
            if let Some(stem) = path.file_stem().and_then(|s| s.to_str()) {
                out.push((stem.to_owned(), path));
            }
        }
    }
    Ok(out)
}

/// Number of training documents for `n` documents at `ratio`.
pub fn train_count(n: usize, ratio: f64) -> usize {
    ((n as f64 * ratio).round() as usize).clamp(1, n - 1)
}

/// Scans `root` for documents, preferring lines files over character files
/// over PDFs for the same stem, and splits them with a seeded shuffle.
pub fn build_manifest(root: &Path, split_ratio: f64, seed: u64) -> Result<CorpusManifest, CorpusError> {
    if !(split_ratio > 0.0 && split_ratio < 1.0) {
        return Err(CorpusError::BadRatio(split_ratio));
    }
    let mut docs: BTreeMap<String, PathBuf> = BTreeMap::new();
    for (dir, ext) in [(PDF_DIR, "pdf"), (CHARS_DIR, "jsonl"), (LINES_DIR, "jsonl")] {
        for (stem, path) in stems(&root.join(dir), ext)? {
            let rel = path.strip_prefix(root).unwrap_or(&path).to_owned();
            docs.insert(stem, rel);
        }
    }
    let n = docs.len();
    if n < 2 {
        return Err(CorpusError::InsufficientDocuments(n));
    }
    let mut order: Vec<&String> = docs.keys().collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let train: BTreeSet<&String> = order[..train_count(n, split_ratio)].iter().copied().collect();
    let name = root
        .canonicalize()
        .ok()
        .and_then(|p| p.file_name().map(|n| n.to_string_lossy().into_owned()))
        .unwrap_or_else(|| "corpus".into());
    Ok(CorpusManifest {
        name,
        documents: docs
            .iter()
            .map(|(id, path)| ManifestEntry {
                doc_id: id.clone(),
                path: path.clone(),
                role: if train.contains(id) {
                    Role::Train
                } else {
                    Role::Test
                },
            })
            .collect(),
        line_counts: None,
    })
}

impl CorpusManifest {
    pub fn entries(&self, role: Role) -> impl Iterator<Item = &ManifestEntry> {
        self.documents.iter().filter(move |d| d.role == role)
    }

    pub fn count(&self, role: Role) -> usize {
        self.entries(role).count()
    }

    pub fn validate(&self, root: &Path) -> Result<(), CorpusError> {
        let mut seen = BTreeSet::new();
        for d in &self.documents {
            if !seen.insert(&d.doc_id) {
                return Err(CorpusError::DuplicateDoc(d.doc_id.clone()));
            }
            if !root.join(&d.path).is_file() {
                return Err(CorpusError::MissingFile {
                    doc_id: d.doc_id.clone(),
                    path: d.path.clone(),
                });
            }
        }
        Ok(())
    }

    pub fn save(&self, root: &Path) -> Result<(), CorpusError> {
        let path = root.join(MANIFEST_FILE);
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        std::fs::write(&path, s).map_err(|e| CorpusError::io(&path, e))
    }

    /// Reads `<root>/manifest.json` and checks that its files exist.
    pub fn load(root: &Path) -> Result<CorpusManifest, CorpusError> {
        let path = root.join(MANIFEST_FILE);
        let s = std::fs::read_to_string(&path).map_err(|e| CorpusError::io(&path, e))?;
        let m: CorpusManifest = serde_json::from_str(&s)?;
        m.validate(root)?;
        Ok(m)
    }
}

/// Loads one document of any supported format as characters.
pub fn load_document(path: &Path) -> Result<PdfDocument, CorpusError> {
    let ingest = |source| CorpusError::Ingest {
        path: path.to_owned(),
        source,
    };
    let stem = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("doc")
        .to_owned();
    match DocFormat::of(path) {
        Some(DocFormat::Pdf) => {
            let bytes = std::fs::read(path).map_err(|e| CorpusError::io(path, e))?;
            let mut doc = parse_pdf(&bytes).map_err(ingest)?;
            doc.doc_id = stem;
            Ok(doc)
        }
        _ => {
            let f = File::open(path).map_err(|e| CorpusError::io(path, e))?;
            read_richchar_jsonl(BufReader::new(f)).map_err(ingest)
        }
    }
}

/// Lines of one document, grouped by page.
pub fn load_document_lines(path: &Path, layout: &LayoutConfig) -> Result<Vec<Vec<Line>>, CorpusError> {
    match DocFormat::of(path) {
        Some(DocFormat::Lines) => {
            let f = File::open(path).map_err(|e| CorpusError::io(path, e))?;
            let lines = read_lines_jsonl(BufReader::new(f))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|source| CorpusError::Lines {
                    path: path.to_owned(),
                    source,
                })?;
            Ok(group_pages(lines))
        }
        _ => Ok(assemble_lines(&load_document(path)?, layout)),
    }
}

/// Per-document line sets for one role, in manifest order.
pub fn documents<'a>(
    manifest: &'a CorpusManifest,
    root: &'a Path,
    role: Role,
    layout: &'a LayoutConfig,
) -> impl Iterator<Item = Result<Vec<Vec<Line>>, CorpusError>> + 'a {
    manifest
        .entries(role)
        .map(move |d| load_document_lines(&root.join(&d.path), layout))
}

/// Streams the lines of one role in (doc_id, page, line_idx) order. Lines
/// files are read record by record; a failing document yields one error and
/// the stream moves on.
pub fn stream_lines<'a>(
    manifest: &'a CorpusManifest,
    root: &'a Path,
    role: Role,
    layout: &'a LayoutConfig,
) -> impl Iterator<Item = Result<Line, CorpusError>> + 'a {
    let mut entries: Vec<&ManifestEntry> = manifest.entries(role).collect();
    entries.sort_by(|a, b| a.doc_id.cmp(&b.doc_id));
    entries.into_iter().flat_map(move |d| {
        let path = root.join(&d.path);
        let it: Box<dyn Iterator<Item = Result<Line, CorpusError>>> = match DocFormat::of(&path) {
            Some(DocFormat::Lines) => match File::open(&path) {
                Ok(f) => {
                    let p = path.clone();
                    let mut failed = false;
                    Box::new(read_lines_jsonl(BufReader::new(f)).map_while(move |r| {
                        if failed {
                            return None;
                        }
                        failed = r.is_err();
                        Some(r.map_err(|source| CorpusError::Lines {
                            path: p.clone(),
                            source,
                        }))
                    }))
                }
                Err(e) => Box::new(std::iter::once(Err(CorpusError::io(&path, e)))),
            },
            _ => match load_document_lines(&path, layout) {
                Ok(pages) => Box::new(pages.into_iter().flatten().map(Ok)),
                Err(e) => Box::new(std::iter::once(Err(e))),
            },
        };
        it
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layout::{write_lines_jsonl, Word};

    fn placeholder_corpus(n: usize) -> tempfile::TempDir {
        let dir = tempfile::tempdir().unwrap();
        std::fs::create_dir(dir.path().join(PDF_DIR)).unwrap();
        for i in 0..n {
            std::fs::write(
                dir.path().join(PDF_DIR).join(format!("doc{i:03}.pdf")),
                b"%PDF-1.4\n",
            )
            .unwrap();
        }
        dir
    }

    #[test]
    fn split_arithmetic() {
        assert_eq!(train_count(67, 0.75), 50);
        assert_eq!(train_count(2, 0.5), 1);
        assert_eq!(train_count(2, 0.99), 1);
        assert_eq!(train_count(10, 0.01), 1);
        let dir = placeholder_corpus(67);
        let m = build_manifest(dir.path(), 0.75, 7).unwrap();
        assert_eq!((m.count(Role::Train), m.count(Role::Test)), (50, 17));
        assert_eq!(build_manifest(dir.path(), 0.75, 7).unwrap(), m);
        assert_ne!(build_manifest(dir.path(), 0.75, 8).unwrap(), m);
    }

    #[test]
    fn too_few_documents() {
        let dir = placeholder_corpus(1);
        assert!(matches!(
            build_manifest(dir.path(), 0.5, 1),
            Err(CorpusError::InsufficientDocuments(1))
        ));
    }

    #[test]
    fn manifest_round_trip_and_validation() {
        let dir = placeholder_corpus(3);
        let m = build_manifest(dir.path(), 0.5, 1).unwrap();
        m.save(dir.path()).unwrap();
        assert_eq!(CorpusManifest::load(dir.path()).unwrap(), m);
        std::fs::remove_file(dir.path().join(&m.documents[0].path)).unwrap();
        assert!(matches!(
            CorpusManifest::load(dir.path()),
            Err(CorpusError::MissingFile { .. })
        ));
    }

    fn lines_doc(id: &str, n: usize) -> Vec<Line> {
        (0..n)
            .map(|i| Line {
                doc_id: id.into(),
                page: 0,
                line_idx: i,
                y: 700.0 - i as f64 * 12.0,
                dominant_font_size: 10.0,
                words: vec![Word {
                    text: "x".into(),
                    x0: 0.0,
                    x1: 5.0,
                }],
            })
            .collect()
    }

    #[test]
    fn streaming_with_a_corrupt_file() {
        let dir = tempfile::tempdir().unwrap();
        let lines = dir.path().join(LINES_DIR);
        std::fs::create_dir(&lines).unwrap();
        for id in ["a", "b"] {
            let f = File::create(lines.join(format!("{id}.jsonl"))).unwrap();
            write_lines_jsonl(&lines_doc(id, 3), f).unwrap();
        }
        std::fs::write(lines.join("c.jsonl"), "{not json}\n").unwrap();
        let mut m = build_manifest(dir.path(), 0.5, 3).unwrap();
        for d in &mut m.documents {
            d.role = Role::Train;
        }
        let layout = LayoutConfig::default();
        let got: Vec<_> = stream_lines(&m, dir.path(), Role::Train, &layout).collect();
        assert_eq!(got.len(), 7);
        let ok: Vec<(String, usize)> = got
            .iter()
            .flatten()
            .map(|l| (l.doc_id.clone(), l.line_idx))
            .collect();
        assert_eq!(ok.len(), 6);
        assert_eq!(ok[0], ("a".into(), 0));
        assert_eq!(ok[5], ("b".into(), 2));
        assert_eq!(got.iter().filter(|r| r.is_err()).count(), 1);
        assert_eq!(stream_lines(&m, dir.path(), Role::Test, &layout).count(), 0);
    }
}
