use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use tablescout::classify::{majority, EnsembleModel};
use tablescout::labels::Label;
use tempfile::TempDir;

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_tablescout"));
    cmd.args(args).env_remove("TABLESCOUT_CONFIG");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("spawn tablescout");
    Output {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8_lossy(&out.stdout).into_owned(),
        stderr: String::from_utf8_lossy(&out.stderr).into_owned(),
    }
}

fn run(args: &[&str]) -> Output {
    run_env(args, &[])
}

fn ok(args: &[&str]) -> Output {
    let o = run(args);
    assert_eq!(o.code, 0, "{args:?}\nstderr: {}", o.stderr);
    o
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn read(path: &Path) -> String {
    std::fs::read_to_string(path).unwrap()
}

fn synth(dir: &Path, docs: usize) -> Value {
    let o = ok(&["synth", p(dir), "--docs", &docs.to_string(), "--seed", "7"]);
    serde_json::from_str(o.stdout.trim()).unwrap()
}

/// All lines of a synthetic corpus in one file.
fn corpus_lines(corpus: &Path, out: &Path) {
    ok(&["extract", p(&corpus.join("lines")), "-o", p(out)]);
}

fn stat(stderr: &str, name: &str) -> usize {
    stderr
        .split_whitespace()
        .find_map(|kv| kv.strip_prefix(&format!("{name}=")))
        .unwrap_or_else(|| panic!("no {name} in {stderr}"))
        .parse()
        .unwrap()
}

#[test]
fn help_and_usage_errors() {
    assert_eq!(run(&["--help"]).code, 0);
    assert_eq!(run(&["frobnicate"]).code, 1);
    assert_eq!(run(&["train"]).code, 1);
}

#[test]
fn extract_matches_golden_lines() {
    let t = TempDir::new().unwrap();
    let out = t.path().join("lines.jsonl");
    ok(&["extract", p(&fixture("report.pdf")), "-o", p(&out)]);
    assert_eq!(read(&out), read(&fixture("report.lines.jsonl")));
}

#[test]
fn extract_without_inputs_is_a_usage_error() {
    let o = run(&["extract"]);
    assert_eq!(o.code, 1);
    assert!(o.stderr.contains("input"), "{}", o.stderr);
}

#[test]
fn extract_partial_and_total_failure() {
    let t = TempDir::new().unwrap();
    let out = t.path().join("lines.jsonl");
    let o = run(&[
        "extract",
        p(&fixture("ab.pdf")),
        p(&fixture("corrupt.pdf")),
        p(&fixture("jpx.pdf")),
        "-o",
        p(&out),
    ]);
    assert_eq!(o.code, 2);
    let failures: Vec<Value> = o
        .stderr
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(failures.len(), 2);
    assert!(failures[0]["doc"].as_str().unwrap().ends_with("corrupt.pdf"));
    assert!(failures[1]["error"].as_str().unwrap().contains("JPXDecode"));
    let lines: Vec<Value> = read(&out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 1);
    assert_eq!(lines[0]["doc_id"], "ab");
    assert_eq!(lines[0]["words"][0]["t"], "AB");

    assert_eq!(
        run(&["extract", p(&fixture("corrupt.pdf")), "-o", p(&out)]).code,
        1
    );
}

#[test]
fn extract_reads_chars_files() {
    let t = TempDir::new().unwrap();
    let c = t.path().join("c");
    ok(&["synth", p(&c), "--docs", "3", "--chars"]);
    let from_chars = t.path().join("a.jsonl");
    let from_lines = t.path().join("b.jsonl");
    ok(&["extract", p(&c.join("chars")), "-o", p(&from_chars)]);
    ok(&["extract", p(&c.join("lines")), "-o", p(&from_lines)]);
    assert_eq!(read(&from_chars), read(&from_lines));
}

#[test]
fn weaklabel_reports_generator_caption_count() {
    let t = TempDir::new().unwrap();
    let c = t.path().join("c");
    let stats = synth(&c, 20);
    let lines = t.path().join("lines.jsonl");
    corpus_lines(&c, &lines);
    let weak = t.path().join("weak.jsonl");
    let o = ok(&["weaklabel", p(&lines), "-o", p(&weak)]);
    assert_eq!(
        stat(&o.stderr, "captions"),
        stats["captions"].as_u64().unwrap() as usize
    );
    assert_eq!(stat(&o.stderr, "documents"), 20);
    let emitted = read(&weak).lines().count();
    assert_eq!(stat(&o.stderr, "emitted"), emitted);
    assert!(emitted > 0);
    // edge captions have no room on one side
    assert!(stat(&o.stderr, "skipped") >= stats["edge_captions"].as_u64().unwrap() as usize);
}

#[test]
fn weaklabel_k_zero_is_a_usage_error() {
    let t = TempDir::new().unwrap();
    let o = run(&[
        "weaklabel",
        p(&fixture("report.lines.jsonl")),
        "-o",
        p(&t.path().join("w")),
        "--k",
        "0",
    ]);
    assert_eq!(o.code, 1);
    assert!(o.stderr.contains("k must be at least 1"), "{}", o.stderr);
}

#[test]
fn weaklabel_without_captions_warns() {
    let t = TempDir::new().unwrap();
    let lines = t.path().join("lines.jsonl");
    ok(&["extract", p(&fixture("ab.pdf")), "-o", p(&lines)]);
    let weak = t.path().join("weak.jsonl");
    let o = ok(&["weaklabel", p(&lines), "-o", p(&weak)]);
    assert!(o.stderr.contains("warning"), "{}", o.stderr);
    assert_eq!(read(&weak), "");
}

#[test]
fn config_file_and_flag_precedence() {
    let t = TempDir::new().unwrap();
    let c = t.path().join("c");
    synth(&c, 8);
    let lines = t.path().join("lines.jsonl");
    corpus_lines(&c, &lines);
    let cfg = t.path().join("ts.toml");
    std::fs::write(&cfg, "[weak]\nk = 3\n").unwrap();
    let emitted = |extra: &[&str], env: &[(&str, &str)]| {
        let mut args = vec!["weaklabel", p(&lines), "-o", "-"];
        args.extend_from_slice(extra);
        let o = run_env(&args, env);
        assert_eq!(o.code, 0, "{}", o.stderr);
        stat(&o.stderr, "emitted")
    };
    let default = emitted(&[], &[]);
    let k3 = emitted(&["--k", "3"], &[]);
    assert_ne!(default, k3);
    assert_eq!(emitted(&["--config", p(&cfg)], &[]), k3);
    assert_eq!(emitted(&[], &[("TABLESCOUT_CONFIG", p(&cfg))]), k3);
    assert_eq!(emitted(&["--k", "8"], &[("TABLESCOUT_CONFIG", p(&cfg))]), default);

    std::fs::write(&cfg, "[weak]\nkay = 3\n").unwrap();
    assert_eq!(run(&["weaklabel", p(&lines), "--config", p(&cfg)]).code, 1);
}

/// Writes a labeled set and matching NAM-only vectors.
fn toy_training_files(dir: &Path, samples: &[(f64, i64)]) -> (PathBuf, PathBuf) {
    let labeled = dir.join("toy.labels.jsonl");
    let vectors = dir.join("toy.vectors.jsonl");
    let mut l = String::new();
    let mut v = String::new();
    for (i, (x, y)) in samples.iter().enumerate() {
        l += &format!(
            "{{\"doc_id\":\"toy\",\"page\":0,\"line_idx\":{i},\"label\":{y},\"source\":\"gold\"}}\n"
        );
        v +=
            &format!("{{\"doc_id\":\"toy\",\"page\":0,\"line_idx\":{i},\"features\":\"nam\",\"x\":[{x}]}}\n");
    }
    std::fs::write(&labeled, l).unwrap();
    std::fs::write(&vectors, v).unwrap();
    (labeled, vectors)
}

fn predictions(path: &Path) -> Vec<Label> {
    read(path)
        .lines()
        .map(|l| {
            let v: Value = serde_json::from_str(l).unwrap();
            Label::from_sign(v["label"].as_i64().unwrap() == 1)
        })
        .collect()
}

#[test]
fn predict_voters_follow_majority() {
    let t = TempDir::new().unwrap();
    // 0.41..0.59 share an NB bin that holds mostly positives, while the
    // linear members put their boundary near 0.5
    let samples = [
        (0.05, -1),
        (0.1, -1),
        (0.15, -1),
        (0.2, -1),
        (0.3, -1),
        (0.42, -1),
        (0.55, 1),
        (0.58, 1),
        (0.59, 1),
        (0.7, 1),
        (0.8, 1),
        (0.9, 1),
    ];
    let (labeled, vectors) = toy_training_files(t.path(), &samples);
    let model = t.path().join("model.json");
    ok(&[
        "train",
        p(&labeled),
        "--vectors",
        p(&vectors),
        "--features",
        "nam",
        "-o",
        p(&model),
    ]);

    let probes = t.path().join("probes.jsonl");
    let body: String = (0..=100)
        .map(|i| {
            format!(
                "{{\"doc_id\":\"p\",\"page\":0,\"line_idx\":{i},\"features\":\"nam\",\"x\":[{}]}}\n",
                i as f64 / 100.0
            )
        })
        .collect();
    std::fs::write(&probes, body).unwrap();
    let mut by_voter = BTreeMap::new();
    for voter in ["ensemble", "lr", "svm", "nb"] {
        let out = t.path().join(format!("{voter}.jsonl"));
        ok(&[
            "predict",
            "--vectors",
            p(&probes),
            "-m",
            p(&model),
            "--voter",
            voter,
            "-o",
            p(&out),
        ]);
        by_voter.insert(voter, predictions(&out));
    }
    let (e, lr, svm, nb) = (
        &by_voter["ensemble"],
        &by_voter["lr"],
        &by_voter["svm"],
        &by_voter["nb"],
    );
    for i in 0..e.len() {
        assert_eq!(e[i], majority([lr[i], svm[i], nb[i]]), "probe {i}");
    }
    assert!((0..e.len()).any(|i| nb[i] != e[i]), "members never disagree");
}

#[test]
fn predict_rejects_narrower_vectors() {
    let t = TempDir::new().unwrap();
    let (labeled, vectors) = toy_training_files(t.path(), &[(0.1, -1), (0.2, -1), (0.8, 1), (0.9, 1)]);
    let model = t.path().join("model.json");
    let o = run(&[
        "train",
        p(&labeled),
        "--vectors",
        p(&vectors),
        "--features",
        "nam+ptd",
        "-o",
        p(&model),
    ]);
    assert_eq!(o.code, 1);
    assert!(o.stderr.contains("mismatch"), "{}", o.stderr);
    assert!(!model.exists());

    ok(&[
        "train",
        p(&labeled),
        "--vectors",
        p(&vectors),
        "--features",
        "nam",
        "-o",
        p(&model),
    ]);
    let m = EnsembleModel::load(&model).unwrap();
    let mut wide = m.clone();
    wide.feature_config.mask = "nam+ptd".parse().unwrap();
    wide.lr.theta = vec![0.0; 6];
    wide.svm.w = vec![0.0; 6];
    wide.nb.cond = vec![m.nb.cond[0].clone(); 6];
    let wide_path = t.path().join("wide.json");
    wide.save(&wide_path).unwrap();
    let o = run(&[
        "predict",
        "--vectors",
        p(&vectors),
        "-m",
        p(&wide_path),
        "-o",
        "-",
    ]);
    assert_eq!(o.code, 1);
    assert!(o.stderr.contains("mismatch"), "{}", o.stderr);
}

#[test]
fn predict_empty_lines_gives_empty_output() {
    let t = TempDir::new().unwrap();
    let (labeled, vectors) = toy_training_files(t.path(), &[(0.1, -1), (0.2, -1), (0.8, 1), (0.9, 1)]);
    let model = t.path().join("model.json");
    ok(&[
        "train",
        p(&labeled),
        "--vectors",
        p(&vectors),
        "--features",
        "nam",
        "-o",
        p(&model),
    ]);
    let empty = t.path().join("empty.jsonl");
    std::fs::write(&empty, "").unwrap();
    let out = t.path().join("pred.jsonl");
    ok(&["predict", p(&empty), "-m", p(&model), "-o", p(&out)]);
    assert_eq!(read(&out), "");
    assert_eq!(run(&["predict", p(&empty), "-o", p(&out)]).code, 1);
}

#[test]
fn train_mask_priors_and_determinism() {
    let t = TempDir::new().unwrap();
    let c = t.path().join("c");
    synth(&c, 12);
    let lines = t.path().join("lines.jsonl");
    corpus_lines(&c, &lines);
    let weak = t.path().join("weak.jsonl");
    ok(&["weaklabel", p(&lines), "-o", p(&weak)]);

    let m1 = t.path().join("m1.json");
    let m2 = t.path().join("m2.json");
    ok(&["train", p(&weak), "--lines", p(&lines), "-o", p(&m1)]);
    ok(&[
        "train",
        p(&weak),
        "--lines",
        p(&lines),
        "-o",
        p(&m2),
        "--jobs",
        "1",
    ]);
    assert_eq!(read(&m1), read(&m2));
    let m = EnsembleModel::load(&m1).unwrap();
    // weak labels come in equal-sized up/down groups
    assert_eq!(m.nb.class_prior, [0.5, 0.5]);
    assert_eq!(m.lr.theta.len(), 11);

    let vectors = t.path().join("features.jsonl");
    ok(&["featurize", p(&lines), "-o", p(&vectors)]);
    let m3 = t.path().join("m3.json");
    ok(&["train", p(&weak), "--vectors", p(&vectors), "-o", p(&m3)]);
    assert_eq!(read(&m1), read(&m3));

    let nam = t.path().join("nam.json");
    ok(&[
        "train",
        p(&weak),
        "--vectors",
        p(&vectors),
        "--features",
        "nam",
        "-o",
        p(&nam),
        "--svm-c",
        "2",
    ]);
    let m = EnsembleModel::load(&nam).unwrap();
    assert_eq!(m.feature_config.mask.as_str(), "nam");
    assert_eq!((m.lr.theta.len(), m.svm.w.len(), m.nb.cond.len()), (1, 1, 1));
    assert_eq!(m.metadata.params.svm.c, 2.0);
}

#[test]
fn evaluate_prints_table_and_report() {
    let t = TempDir::new().unwrap();
    let c = t.path().join("c");
    synth(&c, 4);
    let lines = t.path().join("lines.jsonl");
    corpus_lines(&c, &lines);
    let pred = t.path().join("pred.jsonl");
    ok(&["predict", p(&lines), "--voter", "baseline", "-o", p(&pred)]);
    let report = t.path().join("report.json");
    let o = ok(&[
        "evaluate",
        "--pred",
        p(&pred),
        "--gold",
        p(&c.join("labels")),
        "--report",
        p(&report),
    ]);
    let header: Vec<&str> = o.stdout.lines().next().unwrap().split_whitespace().collect();
    assert_eq!(
        header,
        ["Method", "Accuracy", "Precision", "Recall", "F1-measure"]
    );
    let row: Vec<&str> = o.stdout.lines().nth(1).unwrap().split_whitespace().collect();
    assert_eq!(row[0], "baseline");
    assert!(
        row[1..].iter().all(|v| v.len() == 6 && v.starts_with(['0', '1'])),
        "{row:?}"
    );
    let r: Value = serde_json::from_str(&read(&report)).unwrap();
    let counts = &r["counts"];
    let total: u64 = ["tp", "fp", "fn", "tn"]
        .iter()
        .map(|k| counts[k].as_u64().unwrap())
        .sum();
    assert_eq!(total as usize, read(&lines).lines().count());

    // a gold line without a prediction
    let partial = t.path().join("partial.jsonl");
    std::fs::write(
        &partial,
        read(&pred)
            .lines()
            .skip(1)
            .map(|l| format!("{l}\n"))
            .collect::<String>(),
    )
    .unwrap();
    let o = run(&["evaluate", "--pred", p(&partial), "--gold", p(&c.join("labels"))]);
    assert_eq!(o.code, 1);
    assert!(o.stderr.contains("no prediction"), "{}", o.stderr);
}

#[test]
fn synth_is_deterministic() {
    let t = TempDir::new().unwrap();
    // same directory name, since the manifest records it
    let (a, b) = (t.path().join("1/c"), t.path().join("2/c"));
    synth(&a, 10);
    synth(&b, 10);
    for sub in ["lines", "labels"] {
        let mut names: Vec<_> = std::fs::read_dir(a.join(sub))
            .unwrap()
            .map(|e| e.unwrap().file_name())
            .collect();
        names.sort();
        assert_eq!(names.len(), 10);
        for n in names {
            assert_eq!(
                std::fs::read(a.join(sub).join(&n)).unwrap(),
                std::fs::read(b.join(sub).join(&n)).unwrap()
            );
        }
    }
    assert_eq!(read(&a.join("manifest.json")), read(&b.join("manifest.json")));
}

fn assert_same_files(a: &Path, b: &Path, names: &[&str]) {
    for n in names {
        assert_eq!(
            std::fs::read(a.join(n)).unwrap(),
            std::fs::read(b.join(n)).unwrap(),
            "{n} differs"
        );
    }
}

#[test]
fn pipeline_equals_chained_commands() {
    let t = TempDir::new().unwrap();
    let c = t.path().join("c");
    synth(&c, 16);
    let piped = t.path().join("piped");
    let o = ok(&[
        "pipeline",
        "--corpus",
        p(&c),
        "--work",
        p(&piped),
        "--features",
        "nam+ptd",
        "--k",
        "6",
    ]);
    assert!(o.stdout.starts_with("Method"), "{}", o.stdout);

    let manifest: Value = serde_json::from_str(&read(&c.join("manifest.json"))).unwrap();
    let docs = manifest["documents"].as_array().unwrap();
    let paths = |role: &str| -> Vec<String> {
        docs.iter()
            .filter(|d| d["role"] == role)
            .map(|d| p(&c.join(d["path"].as_str().unwrap())).to_owned())
            .collect()
    };
    let w = t.path().join("chained");
    std::fs::create_dir_all(&w).unwrap();
    let f = |n: &str| p(&w.join(n)).to_owned();
    for (role, name) in [("train", "train.lines.jsonl"), ("test", "test.lines.jsonl")] {
        let mut args = vec!["extract".to_owned()];
        args.extend(paths(role));
        args.extend(["-o".to_owned(), f(name)]);
        ok(&args.iter().map(String::as_str).collect::<Vec<_>>());
    }
    ok(&[
        "weaklabel",
        &f("train.lines.jsonl"),
        "-o",
        &f("weak.jsonl"),
        "--k",
        "6",
    ]);
    ok(&[
        "featurize",
        &f("train.lines.jsonl"),
        "-o",
        &f("train.features.jsonl"),
        "--features",
        "nam+ptd",
    ]);
    ok(&[
        "train",
        &f("weak.jsonl"),
        "--vectors",
        &f("train.features.jsonl"),
        "--features",
        "nam+ptd",
        "-o",
        &f("model.json"),
    ]);
    ok(&[
        "predict",
        &f("test.lines.jsonl"),
        "-m",
        &f("model.json"),
        "-o",
        &f("predictions.jsonl"),
    ]);
    ok(&[
        "predict",
        &f("test.lines.jsonl"),
        "--voter",
        "baseline",
        "-o",
        &f("baseline.jsonl"),
    ]);
    let test_gold: Vec<String> = docs
        .iter()
        .filter(|d| d["role"] == "test")
        .map(|d| {
            p(&c.join("labels")
                .join(format!("{}.jsonl", d["doc_id"].as_str().unwrap())))
            .to_owned()
        })
        .collect();
    let mut args: Vec<String> = [
        "evaluate",
        "--pred",
        &f("predictions.jsonl"),
        "--pred",
        &f("baseline.jsonl"),
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    for g in &test_gold {
        args.extend(["--gold".to_owned(), g.clone()]);
    }
    args.extend([
        "--dataset".to_owned(),
        "c".to_owned(),
        "--report".to_owned(),
        f("report.json"),
    ]);
    let o2 = ok(&args.iter().map(String::as_str).collect::<Vec<_>>());
    assert_eq!(o.stdout, o2.stdout);

    assert_same_files(
        &piped,
        &w,
        &[
            "train.lines.jsonl",
            "test.lines.jsonl",
            "weak.jsonl",
            "train.features.jsonl",
            "model.json",
            "predictions.jsonl",
            "baseline.jsonl",
            "report.json",
        ],
    );
}

#[test]
fn outputs_do_not_depend_on_jobs_or_reruns() {
    let t = TempDir::new().unwrap();
    let c = t.path().join("c");
    synth(&c, 24);
    let (a, b, d) = (t.path().join("a"), t.path().join("b"), t.path().join("d"));
    ok(&["pipeline", "--corpus", p(&c), "--work", p(&a), "--jobs", "1"]);
    ok(&["pipeline", "--corpus", p(&c), "--work", p(&b), "--jobs", "4"]);
    ok(&["pipeline", "--corpus", p(&c), "--work", p(&d), "--jobs", "4"]);
    let names = [
        "train.lines.jsonl",
        "test.lines.jsonl",
        "weak.jsonl",
        "train.features.jsonl",
        "model.json",
        "predictions.jsonl",
        "baseline.jsonl",
        "report.json",
    ];
    assert_same_files(&a, &b, &names);
    assert_same_files(&b, &d, &names);
}

#[test]
fn manifest_command_splits_67_documents() {
    let t = TempDir::new().unwrap();
    let dir = t.path().join("pdf");
    std::fs::create_dir_all(&dir).unwrap();
    for i in 0..67 {
        std::fs::write(dir.join(format!("doc{i:02}.pdf")), b"%PDF-1.4\n").unwrap();
    }
    let o = ok(&["manifest", p(t.path()), "--split", "0.75"]);
    assert!(o.stdout.contains("50 train, 17 test"), "{}", o.stdout);
}

#[test]
fn pipeline_scores_the_test_documents_that_loaded() {
    let t = TempDir::new().unwrap();
    let c = t.path().join("c");
    synth(&c, 16);
    let manifest: Value = serde_json::from_str(&read(&c.join("manifest.json"))).unwrap();
    let test_docs: Vec<&Value> = manifest["documents"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|d| d["role"] == "test")
        .collect();
    let broken = test_docs[0];
    std::fs::write(c.join(broken["path"].as_str().unwrap()), "{not json\n").unwrap();
    let gold_lines: usize = test_docs[1..]
        .iter()
        .map(|d| {
            read(
                &c.join("labels")
                    .join(format!("{}.jsonl", d["doc_id"].as_str().unwrap())),
            )
            .lines()
            .count()
        })
        .sum();

    let work = t.path().join("w");
    let o = run(&["pipeline", "--corpus", p(&c), "--work", p(&work)]);
    assert_eq!(o.code, 2, "{}", o.stderr);
    assert!(
        o.stderr.contains(broken["doc_id"].as_str().unwrap()),
        "{}",
        o.stderr
    );
    let report: Value = serde_json::from_str(&read(&work.join("report.json"))).unwrap();
    for row in report.as_array().unwrap() {
        let c = &row["counts"];
        let total: u64 = ["tp", "fp", "fn", "tn"]
            .iter()
            .map(|k| c[k].as_u64().unwrap())
            .sum();
        assert_eq!(total as usize, gold_lines);
    }
}
