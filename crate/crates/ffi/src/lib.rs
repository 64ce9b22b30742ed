//! C interface to tablescout.
//!
//! Every fallible function returns a [`TsStatus`]. On failure a message is
//! kept per thread and can be read with [`ts_last_error`]. Objects are
//! opaque handles released with their `_free` function; strings returned
//! through out-pointers are released with [`ts_string_free`].

use std::cell::RefCell;
use std::collections::HashMap;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::ptr;

use tablescout::baseline::heuristic_predict;
use tablescout::classify::ensemble::ModelError;
use tablescout::classify::{Dataset, EnsembleModel, TrainError, TrainParams, Voter};
use tablescout::corpus::{load_document, CorpusError};
use tablescout::eval::{compute_metrics, count_confusion, ConfusionCounts};
use tablescout::features::{FeatureError, FeatureMask, FeatureVector, Featurizer};
use tablescout::ingest::PdfDocument;
use tablescout::jsonl::JsonlError;
use tablescout::labels::Label;
use tablescout::layout::{
    assemble_lines, group_pages, read_lines_jsonl, write_lines_jsonl, LayoutConfig, Line, LineKey,
};
use tablescout::weak::{weak_label_document, WeakLabelConfig};
use thiserror::Error;

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Io = 3,
    Parse = 4,
    Model = 5,
    Train = 6,
    OutOfRange = 7,
    Feature = 8,
    InvalidArgument = 9,
    Panic = 99,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TsVoter {
    Ensemble = 0,
    Lr = 1,
    Svm = 2,
    Nb = 3,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TsFeatureSet {
    Nam = 0,
    NamPtd = 1,
    All = 2,
}

/// Eleven feature values of one line.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct TsFeatureVector {
    pub nam: f64,
    /// NN, VB, JJ, RB, others.
    pub ptd: [f64; 5],
    /// person, location, organization, number, time.
    pub nep: [f64; 5],
}

/// Undefined ratios are NaN.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct TsMetrics {
    pub tp: u64,
    pub fp: u64,
    pub fn_: u64,
    pub tn: u64,
    pub accuracy: f64,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
}

/// Characters of one document.
pub struct TsDocument {
    doc: PdfDocument,
}

/// Lines of one or more documents, in reading order.
pub struct TsLines {
    pages: Vec<Vec<Line>>,
    /// (page, position) of each flat line index.
    index: Vec<(usize, usize)>,
}

/// A trained ensemble.
pub struct TsModel {
    model: EnsembleModel,
}

#[derive(Debug, Error)]
enum FfiError {
    #[error("null pointer argument: {0}")]
    Null(&'static str),
    #[error("{0} is not valid UTF-8")]
    Utf8(&'static str),
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Records(#[from] JsonlError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Train(#[from] TrainError),
    #[error(transparent)]
    Feature(#[from] FeatureError),
    #[error("line index {index} out of range ({len} lines)")]
    OutOfRange { index: usize, len: usize },
    #[error("{0}")]
    Invalid(String),
    #[error("internal error: {0}")]
    Panic(String),
}

impl FfiError {
    fn status(&self) -> TsStatus {
        match self {
            FfiError::Null(_) => TsStatus::NullPointer,
            FfiError::Utf8(_) => TsStatus::InvalidUtf8,
            FfiError::Io { .. } => TsStatus::Io,
            FfiError::Corpus(CorpusError::Io { .. }) => TsStatus::Io,
            FfiError::Corpus(_) | FfiError::Records(_) => TsStatus::Parse,
            FfiError::Model(ModelError::Io(_)) => TsStatus::Io,
            FfiError::Model(_) => TsStatus::Model,
            FfiError::Train(_) => TsStatus::Train,
            FfiError::Feature(_) => TsStatus::Feature,
            FfiError::OutOfRange { .. } => TsStatus::OutOfRange,
            FfiError::Invalid(_) => TsStatus::InvalidArgument,
            FfiError::Panic(_) => TsStatus::Panic,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), FfiError>) -> TsStatus {
    let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into());
        Err(FfiError::Panic(msg))
    });
    match res {
        Ok(()) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            TsStatus::Ok
        }
        Err(e) => {
            let status = e.status();
            set_error(e.to_string());
            status
        }
    }
}

unsafe fn path_arg(p: *const c_char, name: &'static str) -> Result<PathBuf, FfiError> {
    if p.is_null() {
        return Err(FfiError::Null(name));
    }
    let s = CStr::from_ptr(p).to_str().map_err(|_| FfiError::Utf8(name))?;
    Ok(PathBuf::from(s))
}

unsafe fn deref<'a, T>(p: *const T, name: &'static str) -> Result<&'a T, FfiError> {
    p.as_ref().ok_or(FfiError::Null(name))
}

unsafe fn put<T>(out: *mut *mut T, value: T) {
    *out = Box::into_raw(Box::new(value));
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .expect("no interior NUL")
        .into_raw()
}

fn label_code(l: Label) -> i32 {
    l.as_i64() as i32
}

impl TsLines {
    fn new(pages: Vec<Vec<Line>>) -> Self {
        let index = pages
            .iter()
            .enumerate()
            .flat_map(|(p, lines)| (0..lines.len()).map(move |i| (p, i)))
            .collect();
        TsLines { pages, index }
    }

    fn line(&self, i: usize) -> Result<&Line, FfiError> {
        let &(p, j) = self.index.get(i).ok_or(FfiError::OutOfRange {
            index: i,
            len: self.index.len(),
        })?;
        Ok(&self.pages[p][j])
    }

    /// Pages grouped into runs that share a document id.
    fn documents(&self) -> Vec<&[Vec<Line>]> {
        let mut out = Vec::new();
        let mut start = 0;
        for i in 1..=self.pages.len() {
            if i == self.pages.len() || self.pages[i][0].doc_id != self.pages[start][0].doc_id {
                out.push(&self.pages[start..i]);
                start = i;
            }
        }
        out
    }

    fn features(&self) -> Result<Vec<FeatureVector>, FfiError> {
        let f = Featurizer::default();
        let mut out = Vec::with_capacity(self.index.len());
        for page in &self.pages {
            out.extend(f.featurize_page(page, None)?);
        }
        Ok(out)
    }
}

fn check_out<T>(out: *mut T, name: &'static str) -> Result<(), FfiError> {
    if out.is_null() {
        Err(FfiError::Null(name))
    } else {
        Ok(())
    }
}

/// Message of the last failed call on this thread, or NULL. The pointer
/// stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn ts_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ts_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Opens a PDF or a characters JSONL file.
///
/// # Safety
/// `path` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ts_document_open(path: *const c_char, out: *mut *mut TsDocument) -> TsStatus {
    guard(|| {
        check_out(out, "out")?;
        let doc = load_document(&path_arg(path, "path")?)?;
        put(out, TsDocument { doc });
        Ok(())
    })
}

/// # Safety
/// `doc` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn ts_document_page_count(doc: *const TsDocument) -> usize {
    doc.as_ref().map_or(0, |d| d.doc.pages.len())
}

/// # Safety
/// `doc` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn ts_document_char_count(doc: *const TsDocument) -> usize {
    doc.as_ref().map_or(0, |d| d.doc.char_count())
}

/// # Safety
/// `doc` must come from [`ts_document_open`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ts_document_free(doc: *mut TsDocument) {
    if !doc.is_null() {
        drop(Box::from_raw(doc));
    }
}

/// Groups a document's characters into lines with the default layout
/// settings.
///
/// # Safety
/// `doc` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ts_lines_from_document(doc: *const TsDocument, out: *mut *mut TsLines) -> TsStatus {
    guard(|| {
        check_out(out, "out")?;
        let d = deref(doc, "doc")?;
        let pages = assemble_lines(&d.doc, &LayoutConfig::default())
            .into_iter()
            .filter(|p| !p.is_empty())
            .collect();
        put(out, TsLines::new(pages));
        Ok(())
    })
}

/// Reads a lines JSONL file.
///
/// # Safety
/// `path` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ts_lines_read(path: *const c_char, out: *mut *mut TsLines) -> TsStatus {
    guard(|| {
        check_out(out, "out")?;
        let path = path_arg(path, "path")?;
        let f = std::fs::File::open(&path).map_err(|source| FfiError::Io { path, source })?;
        let lines = read_lines_jsonl(std::io::BufReader::new(f)).collect::<Result<Vec<_>, _>>()?;
        put(out, TsLines::new(group_pages(lines)));
        Ok(())
    })
}

/// # Safety
/// `lines` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn ts_lines_count(lines: *const TsLines) -> usize {
    lines.as_ref().map_or(0, |l| l.index.len())
}

/// Text of line `i`, words joined by single spaces. Free the result with
/// [`ts_string_free`].
///
/// # Safety
/// `lines` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ts_lines_text(lines: *const TsLines, i: usize, out: *mut *mut c_char) -> TsStatus {
    guard(|| {
        check_out(out, "out")?;
        *out = c_string(deref(lines, "lines")?.line(i)?.text());
        Ok(())
    })
}

/// All lines as JSONL. Free the result with [`ts_string_free`].
///
/// # Safety
/// `lines` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ts_lines_to_jsonl(lines: *const TsLines, out: *mut *mut c_char) -> TsStatus {
    guard(|| {
        check_out(out, "out")?;
        let l = deref(lines, "lines")?;
        let mut buf = Vec::new();
        write_lines_jsonl(l.pages.iter().flatten(), &mut buf).expect("writing to memory");
        *out = c_string(String::from_utf8(buf).expect("JSON is UTF-8"));
        Ok(())
    })
}

/// Feature vector of line `i` with the built-in taggers.
///
/// # Safety
/// `lines` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ts_lines_features(
    lines: *const TsLines,
    i: usize,
    out: *mut TsFeatureVector,
) -> TsStatus {
    guard(|| {
        check_out(out, "out")?;
        let l = deref(lines, "lines")?;
        let line = l.line(i)?;
        let (p, _) = l.index[i];
        let v = Featurizer::default().featurize(line, &l.pages[p], None)?;
        *out = TsFeatureVector {
            nam: v.nam,
            ptd: v.ptd,
            nep: v.nep,
        };
        Ok(())
    })
}

/// # Safety
/// `lines` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ts_lines_free(lines: *mut TsLines) {
    if !lines.is_null() {
        drop(Box::from_raw(lines));
    }
}

/// Heuristic labels (1 table, -1 non-table) for every line. `labels` must
/// hold `len` entries and `len` must equal the line count.
///
/// # Safety
/// `lines` must be a live handle and `labels` writable for `len` entries.
#[no_mangle]
pub unsafe extern "C" fn ts_baseline_predict(
    lines: *const TsLines,
    labels: *mut i32,
    len: usize,
) -> TsStatus {
    guard(|| {
        check_out(labels, "labels")?;
        let l = deref(lines, "lines")?;
        if len != l.index.len() {
            return Err(FfiError::Invalid(format!(
                "labels has {len} entries for {} lines",
                l.index.len()
            )));
        }
        let out = std::slice::from_raw_parts_mut(labels, len);
        let flat = l
            .documents()
            .into_iter()
            .flat_map(|d| heuristic_predict(d).into_iter().flatten());
        for (slot, label) in out.iter_mut().zip(flat) {
            *slot = label_code(label);
        }
        Ok(())
    })
}

/// Weak-labels `lines` around table captions and trains an ensemble on the
/// result with default parameters.
///
/// # Safety
/// `lines` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ts_model_train(
    lines: *const TsLines,
    features: TsFeatureSet,
    out: *mut *mut TsModel,
) -> TsStatus {
    guard(|| {
        check_out(out, "out")?;
        let l = deref(lines, "lines")?;
        let mask = match features {
            TsFeatureSet::Nam => FeatureMask::Nam,
            TsFeatureSet::NamPtd => FeatureMask::NamPtd,
            TsFeatureSet::All => FeatureMask::All,
        };
        let vectors: HashMap<LineKey, FeatureVector> = l
            .pages
            .iter()
            .flatten()
            .map(Line::key)
            .zip(l.features()?)
            .collect();
        let cfg = WeakLabelConfig::default();
        let (mut rows, mut labels) = (Vec::new(), Vec::new());
        for doc in l.documents() {
            for w in weak_label_document(doc, &cfg).0 {
                rows.push(mask.project(&vectors[&w.key()]));
                labels.push(w.label);
            }
        }
        let model = EnsembleModel::train(&Dataset::new(rows, labels), mask, &TrainParams::default())?;
        put(out, TsModel { model });
        Ok(())
    })
}

/// # Safety
/// `path` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ts_model_load(path: *const c_char, out: *mut *mut TsModel) -> TsStatus {
    guard(|| {
        check_out(out, "out")?;
        let model = EnsembleModel::load(&path_arg(path, "path")?)?;
        put(out, TsModel { model });
        Ok(())
    })
}

/// # Safety
/// `model` must be a live handle and `path` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn ts_model_save(model: *const TsModel, path: *const c_char) -> TsStatus {
    guard(|| {
        let m = deref(model, "model")?;
        m.model.save(&path_arg(path, "path")?)?;
        Ok(())
    })
}

/// Labels (1 table, -1 non-table) for every line. `len` must equal the
/// line count.
///
/// # Safety
/// `model` and `lines` must be live handles and `labels` writable for
/// `len` entries.
#[no_mangle]
pub unsafe extern "C" fn ts_model_predict(
    model: *const TsModel,
    lines: *const TsLines,
    voter: TsVoter,
    labels: *mut i32,
    len: usize,
) -> TsStatus {
    guard(|| {
        check_out(labels, "labels")?;
        let m = &deref(model, "model")?.model;
        let l = deref(lines, "lines")?;
        if len != l.index.len() {
            return Err(FfiError::Invalid(format!(
                "labels has {len} entries for {} lines",
                l.index.len()
            )));
        }
        let voter = match voter {
            TsVoter::Ensemble => Voter::Ensemble,
            TsVoter::Lr => Voter::Lr,
            TsVoter::Svm => Voter::Svm,
            TsVoter::Nb => Voter::Nb,
        };
        let out = std::slice::from_raw_parts_mut(labels, len);
        for (slot, v) in out.iter_mut().zip(l.features()?) {
            *slot = label_code(m.predict(&v, voter));
        }
        Ok(())
    })
}

/// Number of feature dimensions the model uses.
///
/// # Safety
/// `model` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn ts_model_dims(model: *const TsModel) -> usize {
    model.as_ref().map_or(0, |m| m.model.dims())
}

/// # Safety
/// `model` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ts_model_free(model: *mut TsModel) {
    if !model.is_null() {
        drop(Box::from_raw(model));
    }
}

/// Confusion counts and metrics of `pred` against `gold`, both holding
/// `len` labels of 1 or -1.
///
/// # Safety
/// `pred` and `gold` must be readable for `len` entries and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ts_metrics(
    pred: *const i32,
    gold: *const i32,
    len: usize,
    out: *mut TsMetrics,
) -> TsStatus {
    guard(|| {
        check_out(out, "out")?;
        if pred.is_null() || gold.is_null() {
            return Err(FfiError::Null("pred/gold"));
        }
        let to_labels = |p: *const i32, name: &str| -> Result<Vec<Label>, FfiError> {
            std::slice::from_raw_parts(p, len)
                .iter()
                .map(|&v| Label::try_from(v as i64).map_err(|e| FfiError::Invalid(format!("{name}: {e}"))))
                .collect()
        };
        let c: ConfusionCounts = count_confusion(&to_labels(pred, "pred")?, &to_labels(gold, "gold")?)
            .map_err(|e| FfiError::Invalid(e.to_string()))?;
        let m = compute_metrics(c, "", "").map_err(|e| FfiError::Invalid(e.to_string()))?;
        *out = TsMetrics {
            tp: c.tp,
            fp: c.fp,
            fn_: c.fn_,
            tn: c.tn,
            accuracy: m.accuracy,
            precision: m.precision.0.unwrap_or(f64::NAN),
            recall: m.recall.0.unwrap_or(f64::NAN),
            f1: m.f1.0.unwrap_or(f64::NAN),
        };
        Ok(())
    })
}
