use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use tablescout::layout::write_lines_jsonl;
use tablescout::synth::{self, SynthConfig};
use tablescout_ffi::*;

fn fixture(name: &str) -> CString {
    let p = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../core/tests/fixtures")
        .join(name);
    CString::new(p.to_str().unwrap()).unwrap()
}

fn cpath(p: &Path) -> CString {
    CString::new(p.to_str().unwrap()).unwrap()
}

fn last_error() -> String {
    let p = ts_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

fn open_lines(name: &str) -> *mut TsLines {
    let mut doc = ptr::null_mut();
    assert_eq!(
        unsafe { ts_document_open(fixture(name).as_ptr(), &mut doc) },
        TsStatus::Ok
    );
    let mut lines = ptr::null_mut();
    assert_eq!(unsafe { ts_lines_from_document(doc, &mut lines) }, TsStatus::Ok);
    unsafe { ts_document_free(doc) };
    lines
}

/// All lines of a small synthetic corpus in one file, plus gold labels.
fn synth_lines(dir: &Path) -> (PathBuf, Vec<i32>) {
    let docs = synth::generate(&SynthConfig {
        docs: 20,
        seed: 3,
        ..Default::default()
    });
    let path = dir.join("lines.jsonl");
    let f = std::fs::File::create(&path).unwrap();
    write_lines_jsonl(docs.iter().flat_map(|d| d.pages.iter().flatten()), f).unwrap();
    let gold = docs
        .iter()
        .flat_map(|d| d.roles.iter().flatten().map(|r| r.gold().as_i64() as i32))
        .collect();
    (path, gold)
}

#[test]
fn document_to_lines() {
    let mut doc = ptr::null_mut();
    assert_eq!(
        unsafe { ts_document_open(fixture("ab.pdf").as_ptr(), &mut doc) },
        TsStatus::Ok
    );
    assert!(ts_last_error().is_null());
    assert_eq!(unsafe { ts_document_page_count(doc) }, 1);
    assert_eq!(unsafe { ts_document_char_count(doc) }, 2);
    unsafe { ts_document_free(doc) };

    let lines = open_lines("ab.pdf");
    assert_eq!(unsafe { ts_lines_count(lines) }, 1);
    let mut text = ptr::null_mut();
    assert_eq!(unsafe { ts_lines_text(lines, 0, &mut text) }, TsStatus::Ok);
    assert_eq!(unsafe { CStr::from_ptr(text) }.to_str().unwrap(), "AB");
    unsafe { ts_string_free(text) };

    let mut v = TsFeatureVector::default();
    assert_eq!(unsafe { ts_lines_features(lines, 0, &mut v) }, TsStatus::Ok);
    assert_eq!(v.nam, 0.0);
    assert!((v.ptd.iter().sum::<f64>() - 1.0).abs() < 1e-12);

    assert_eq!(
        unsafe { ts_lines_text(lines, 1, &mut text) },
        TsStatus::OutOfRange
    );
    assert!(last_error().contains("out of range"));
    unsafe { ts_lines_free(lines) };
}

#[test]
fn report_lines_match_the_extract_golden() {
    let lines = open_lines("report.pdf");
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { ts_lines_to_jsonl(lines, &mut json) }, TsStatus::Ok);
    let got = unsafe { CStr::from_ptr(json) }.to_str().unwrap().to_owned();
    unsafe { ts_string_free(json) };
    let golden = std::fs::read_to_string(fixture("report.lines.jsonl").to_str().unwrap()).unwrap();
    assert_eq!(got, golden);

    let n = unsafe { ts_lines_count(lines) };
    let mut labels = vec![0i32; n];
    assert_eq!(
        unsafe { ts_baseline_predict(lines, labels.as_mut_ptr(), n) },
        TsStatus::Ok
    );
    assert!(labels.iter().all(|l| *l == 1 || *l == -1));
    assert_eq!(
        unsafe { ts_baseline_predict(lines, labels.as_mut_ptr(), n - 1) },
        TsStatus::InvalidArgument
    );
    unsafe { ts_lines_free(lines) };
}

#[test]
fn error_codes() {
    let mut doc = ptr::null_mut();
    assert_eq!(
        unsafe { ts_document_open(ptr::null(), &mut doc) },
        TsStatus::NullPointer
    );
    assert_eq!(
        unsafe { ts_document_open(fixture("ab.pdf").as_ptr(), ptr::null_mut()) },
        TsStatus::NullPointer
    );
    assert_eq!(
        unsafe { ts_document_open(fixture("corrupt.pdf").as_ptr(), &mut doc) },
        TsStatus::Parse
    );
    assert!(!last_error().is_empty());
    assert_eq!(
        unsafe { ts_document_open(fixture("missing.pdf").as_ptr(), &mut doc) },
        TsStatus::Io
    );
    assert!(doc.is_null());

    let bad = [0xffu8, 0];
    assert_eq!(
        unsafe { ts_document_open(bad.as_ptr().cast(), &mut doc) },
        TsStatus::InvalidUtf8
    );

    let mut model = ptr::null_mut();
    assert_eq!(
        unsafe { ts_model_load(fixture("report.lines.jsonl").as_ptr(), &mut model) },
        TsStatus::Model
    );
    assert_eq!(
        unsafe { ts_model_load(fixture("nope.json").as_ptr(), &mut model) },
        TsStatus::Io
    );

    // no captions with both context groups, so nothing to train on
    let lines = open_lines("ab.pdf");
    assert_eq!(
        unsafe { ts_model_train(lines, TsFeatureSet::All, &mut model) },
        TsStatus::Train
    );
    unsafe { ts_lines_free(lines) };

    // freeing NULL is a no-op
    unsafe {
        ts_lines_free(ptr::null_mut());
        ts_model_free(ptr::null_mut());
        ts_document_free(ptr::null_mut());
        ts_string_free(ptr::null_mut());
    }
    assert_eq!(unsafe { ts_lines_count(ptr::null()) }, 0);
}

#[test]
fn errors_are_per_thread() {
    let mut doc = ptr::null_mut();
    assert_eq!(
        unsafe { ts_document_open(ptr::null(), &mut doc) },
        TsStatus::NullPointer
    );
    std::thread::spawn(|| assert!(ts_last_error().is_null()))
        .join()
        .unwrap();
    assert!(last_error().contains("null"));
}

#[test]
fn train_predict_save_load() {
    let t = tempfile::TempDir::new().unwrap();
    let (path, gold) = synth_lines(t.path());
    let mut lines = ptr::null_mut();
    assert_eq!(
        unsafe { ts_lines_read(cpath(&path).as_ptr(), &mut lines) },
        TsStatus::Ok
    );
    let n = unsafe { ts_lines_count(lines) };
    assert_eq!(n, gold.len());

    let mut model = ptr::null_mut();
    assert_eq!(
        unsafe { ts_model_train(lines, TsFeatureSet::All, &mut model) },
        TsStatus::Ok
    );
    assert_eq!(unsafe { ts_model_dims(model) }, 11);
    let mut pred = vec![0i32; n];
    assert_eq!(
        unsafe { ts_model_predict(model, lines, TsVoter::Ensemble, pred.as_mut_ptr(), n) },
        TsStatus::Ok
    );
    let mut m = TsMetrics::default();
    assert_eq!(
        unsafe { ts_metrics(pred.as_ptr(), gold.as_ptr(), n, &mut m) },
        TsStatus::Ok
    );
    assert_eq!(m.tp + m.fp + m.fn_ + m.tn, n as u64);
    assert!(m.accuracy >= 0.95, "{m:?}");

    let saved = t.path().join("model.json");
    assert_eq!(
        unsafe { ts_model_save(model, cpath(&saved).as_ptr()) },
        TsStatus::Ok
    );
    let mut loaded = ptr::null_mut();
    assert_eq!(
        unsafe { ts_model_load(cpath(&saved).as_ptr(), &mut loaded) },
        TsStatus::Ok
    );
    for voter in [TsVoter::Ensemble, TsVoter::Lr, TsVoter::Svm, TsVoter::Nb] {
        let mut a = vec![0i32; n];
        let mut b = vec![0i32; n];
        assert_eq!(
            unsafe { ts_model_predict(model, lines, voter, a.as_mut_ptr(), n) },
            TsStatus::Ok
        );
        assert_eq!(
            unsafe { ts_model_predict(loaded, lines, voter, b.as_mut_ptr(), n) },
            TsStatus::Ok
        );
        assert_eq!(a, b);
    }
    unsafe {
        ts_model_free(model);
        ts_model_free(loaded);
        ts_lines_free(lines);
    }
}

#[test]
fn metrics_hand_case_and_undefined_values() {
    let pred = [1, 1, 1, 1, -1, -1, -1, -1, -1, -1];
    let gold = [1, 1, 1, -1, 1, 1, -1, -1, -1, -1];
    let mut m = TsMetrics::default();
    assert_eq!(
        unsafe { ts_metrics(pred.as_ptr(), gold.as_ptr(), 10, &mut m) },
        TsStatus::Ok
    );
    assert_eq!((m.tp, m.fp, m.fn_, m.tn), (3, 1, 2, 4));
    assert_eq!((m.accuracy, m.precision, m.recall), (0.7, 0.75, 0.6));
    assert!((m.f1 - 2.0 / 3.0).abs() < 1e-12);

    let none = [-1, -1];
    assert_eq!(
        unsafe { ts_metrics(none.as_ptr(), none.as_ptr(), 2, &mut m) },
        TsStatus::Ok
    );
    assert!(m.precision.is_nan() && m.recall.is_nan() && m.f1.is_nan());
    assert_eq!(m.accuracy, 1.0);

    let bad = [0, 1];
    assert_eq!(
        unsafe { ts_metrics(bad.as_ptr(), none.as_ptr(), 2, &mut m) },
        TsStatus::InvalidArgument
    );
    assert_eq!(
        unsafe { ts_metrics(none.as_ptr(), none.as_ptr(), 0, &mut m) },
        TsStatus::InvalidArgument
    );
}

#[test]
fn header_compiles_as_c() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let header = dir.join("include/tablescout.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for f in [
        "ts_model_predict",
        "ts_last_error",
        "ts_string_free",
        "TS_STATUS_PANIC",
        "typedef struct TsModel TsModel",
    ] {
        assert!(text.contains(f), "{f} missing from header");
    }
    let t = tempfile::TempDir::new().unwrap();
    let src = t.path().join("use.c");
    std::fs::write(
        &src,
        "#include \"tablescout.h\"\n\
         int main(void) {\n\
           TsLines *l = 0; TsModel *m = 0; int32_t labels[1];\n\
           TsStatus s = ts_model_predict(m, l, TS_VOTER_ENSEMBLE, labels, ts_lines_count(l));\n\
           TsMetrics x; (void)x; (void)s; return ts_last_error() == 0;\n\
         }\n",
    )
    .unwrap();
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(header.parent().unwrap())
        .arg(&src)
        .status()
        .expect("a C compiler on PATH");
    assert!(status.success());
}
