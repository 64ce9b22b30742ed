//! The `tablescout` command line.
//!
//! Exit status: 0 on success, 2 when some documents failed but the rest were
//! processed, 1 on any fatal or usage error. Per-document failures go to
//! stderr as JSON lines `{"doc": .., "error": ..}`.

use std::collections::{HashMap, HashSet};
use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::baseline::heuristic_labeled;
use crate::classify::ensemble::ModelError;
use crate::classify::{Dataset, EnsembleModel, TrainError, TrainParams, Voter};
use crate::config::{Config, ConfigFileError};
use crate::corpus::{build_manifest, CorpusError, CorpusManifest, Role, LABELS_DIR};
use crate::eval::{compute_metrics, count_confusion_keyed, render_table, EvalError, MetricsReport};
use crate::features::{
    read_annotations, FeatureError, FeatureMask, FeatureRecord, Featurizer, LineAnnotation, NeTagger,
    PosTagger,
};
use crate::ingest::{read_richchar_jsonl, IngestError};
use crate::jsonl::{self, JsonlError};
use crate::labels::{LabelRecord, LabeledLine};
use crate::layout::{
    assemble_lines, group_documents, group_pages, read_lines_jsonl, LayoutConfig, Line, LineKey,
};
use crate::pdf::parse_pdf;
use crate::synth::{write_corpus, SynthConfig};
use crate::weak::{weak_label_document, WeakLabelStats};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Success = 0,
    Fatal = 1,
    Partial = 2,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Config(#[from] ConfigFileError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{path}: {source}")]
    Records {
        path: PathBuf,
        #[source]
        source: JsonlError,
    },
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("training failed: {0}")]
    Train(#[from] TrainError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error("{key}: {source}")]
    Feature {
        key: String,
        #[source]
        source: FeatureError,
    },
    #[error("feature mask mismatch: {0}")]
    MaskMismatch(String),
    #[error("{0}")]
    Missing(String),
}

type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "tablescout", version, about = "Detect table lines in PDF documents")]
pub struct Cli {
    /// TOML config file (default: $TABLESCOUT_CONFIG)
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// Worker threads for per-document work
    #[arg(long, global = true, value_name = "N")]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// PDFs or rich-character JSONL files to lines JSONL
    Extract(ExtractArgs),
    /// Weak labels from table captions
    Weaklabel(WeaklabelArgs),
    /// Feature vectors for every line
    Featurize(FeaturizeArgs),
    /// Train the LR, SVM and NB ensemble
    Train(TrainArgs),
    /// Label lines with a trained model or the heuristic baseline
    Predict(PredictArgs),
    /// Compare predictions with gold labels
    Evaluate(EvaluateArgs),
    /// Run extract, weaklabel, featurize, train, predict and evaluate on a corpus
    Pipeline(PipelineArgs),
    /// Generate a synthetic corpus with gold labels
    Synth(SynthArgs),
    /// Write a corpus manifest with a seeded train/test split
    Manifest(ManifestArgs),
}

#[derive(Debug, Clone, Default, Args)]
pub struct LayoutFlags {
    /// Baseline tolerance as a fraction of font size
    #[arg(long)]
    pub line_tolerance: Option<f64>,
    /// Word break gap as a fraction of font size
    #[arg(long)]
    pub word_gap: Option<f64>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct ExtractArgs {
    /// Input files or directories
    pub inputs: Vec<PathBuf>,
    #[arg(short, long, default_value = "-")]
    pub out: PathBuf,
    #[command(flatten)]
    pub layout: LayoutFlags,
}

#[derive(Debug, Clone, Default, Args)]
pub struct WeakFlags {
    /// Context lines on each side of a caption
    #[arg(long)]
    pub k: Option<usize>,
    /// Smallest group compared
    #[arg(long)]
    pub min_group: Option<usize>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct WeaklabelArgs {
    /// Lines JSONL
    pub lines: PathBuf,
    #[arg(short, long, default_value = "-")]
    pub out: PathBuf,
    #[command(flatten)]
    pub weak: WeakFlags,
}

#[derive(Debug, Clone, Default, Args)]
pub struct FeaturizeArgs {
    /// Lines JSONL
    pub lines: PathBuf,
    #[arg(short, long, default_value = "-")]
    pub out: PathBuf,
    /// nam, nam+ptd or nam+ptd+nep
    #[arg(long)]
    pub features: Option<FeatureMask>,
    /// Pre-tagged POS/NE annotations JSONL
    #[arg(long)]
    pub annotations: Option<PathBuf>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct TrainFlags {
    #[arg(long)]
    pub lr_lambda: Option<f64>,
    #[arg(long)]
    pub lr_max_iters: Option<usize>,
    #[arg(long)]
    pub lr_tol: Option<f64>,
    #[arg(long)]
    pub svm_c: Option<f64>,
    #[arg(long)]
    pub svm_epochs: Option<usize>,
    #[arg(long)]
    pub nb_step: Option<f64>,
    #[arg(long)]
    pub nb_alpha: Option<f64>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct TrainArgs {
    /// Labeled-lines JSONL
    pub labeled: PathBuf,
    /// Model file to write
    #[arg(short, long)]
    pub out: PathBuf,
    /// nam, nam+ptd or nam+ptd+nep
    #[arg(long)]
    pub features: Option<FeatureMask>,
    /// Full lines JSONL giving page context for the labeled lines
    #[arg(long, conflicts_with = "vectors")]
    pub lines: Option<PathBuf>,
    /// Precomputed feature JSONL from `featurize`
    #[arg(long)]
    pub vectors: Option<PathBuf>,
    #[arg(long)]
    pub annotations: Option<PathBuf>,
    #[command(flatten)]
    pub params: TrainFlags,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum VoterArg {
    #[default]
    Ensemble,
    Lr,
    Svm,
    Nb,
    Baseline,
}

impl VoterArg {
    fn voter(self) -> Option<Voter> {
        match self {
            VoterArg::Ensemble => Some(Voter::Ensemble),
            VoterArg::Lr => Some(Voter::Lr),
            VoterArg::Svm => Some(Voter::Svm),
            VoterArg::Nb => Some(Voter::Nb),
            VoterArg::Baseline => None,
        }
    }
}

#[derive(Debug, Clone, Default, Args)]
pub struct PredictArgs {
    /// Lines JSONL
    #[arg(required_unless_present = "vectors", conflicts_with = "vectors")]
    pub lines: Option<PathBuf>,
    /// Precomputed feature JSONL instead of lines
    #[arg(long)]
    pub vectors: Option<PathBuf>,
    #[arg(short, long)]
    pub model: Option<PathBuf>,
    #[arg(short, long, default_value = "-")]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value_t = VoterArg::Ensemble)]
    pub voter: VoterArg,
    #[arg(long)]
    pub annotations: Option<PathBuf>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct EvaluateArgs {
    /// Prediction files, one report row each
    #[arg(long = "pred", required = true)]
    pub preds: Vec<PathBuf>,
    /// Gold label files or directories of them
    #[arg(long = "gold", required = true)]
    pub gold: Vec<PathBuf>,
    /// Row names, in --pred order (default: the predictions' source)
    #[arg(long = "name")]
    pub names: Vec<String>,
    #[arg(long, default_value = "test")]
    pub dataset: String,
    /// Write the metrics as JSON
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Ignore predictions for lines without a gold label
    #[arg(long)]
    pub allow_extra: bool,
}

#[derive(Debug, Clone, Default, Args)]
pub struct PipelineArgs {
    #[arg(long)]
    pub corpus: PathBuf,
    /// Directory for intermediate and final outputs
    #[arg(long)]
    pub work: PathBuf,
    /// Split used when the corpus has no manifest
    #[arg(long, default_value_t = 0.75)]
    pub split: f64,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    #[arg(long)]
    pub features: Option<FeatureMask>,
    #[arg(long, value_enum, default_value_t = VoterArg::Ensemble)]
    pub voter: VoterArg,
    #[command(flatten)]
    pub layout: LayoutFlags,
    #[command(flatten)]
    pub weak: WeakFlags,
    #[command(flatten)]
    pub params: TrainFlags,
}

#[derive(Debug, Clone, Args)]
pub struct SynthArgs {
    /// Output corpus directory
    pub out: PathBuf,
    #[arg(long, default_value_t = 10)]
    pub docs: usize,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    #[arg(long, default_value_t = 8.0)]
    pub table_gap: f64,
    #[arg(long, default_value_t = 2.0)]
    pub prose_gap: f64,
    #[arg(long)]
    pub jitter: Option<f64>,
    #[arg(long)]
    pub no_table_rate: Option<f64>,
    #[arg(long)]
    pub edge_caption_rate: Option<f64>,
    #[arg(long)]
    pub min_pages: Option<usize>,
    #[arg(long)]
    pub max_pages: Option<usize>,
    #[arg(long)]
    pub split: Option<f64>,
    /// Also write rich-character files
    #[arg(long)]
    pub chars: bool,
}

#[derive(Debug, Clone, Args)]
pub struct ManifestArgs {
    pub root: PathBuf,
    #[arg(long, default_value_t = 0.75)]
    pub split: f64,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { Exit::Fatal as i32 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(code) => code as i32,
        Err(e) => {
            eprintln!("error: {e}");
            Exit::Fatal as i32
        }
    }
}

pub fn execute(cli: &Cli) -> Result<Exit> {
    let config = Config::resolve(cli.config.as_deref())?;
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.jobs.or(config.jobs) {
        if n == 0 {
            return Err(CliError::Usage("--jobs must be at least 1".into()));
        }
        pool = pool.num_threads(n);
    }
    let pool = pool
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start worker threads: {e}")))?;
    pool.install(|| match &cli.command {
        Command::Extract(a) => cmd_extract(a, &config),
        Command::Weaklabel(a) => cmd_weaklabel(a, &config),
        Command::Featurize(a) => cmd_featurize(a, &config),
        Command::Train(a) => cmd_train(a, &config),
        Command::Predict(a) => cmd_predict(a, &config),
        Command::Evaluate(a) => cmd_evaluate(a).map(|_| Exit::Success),
        Command::Pipeline(a) => cmd_pipeline(a, &config),
        Command::Synth(a) => cmd_synth(a),
        Command::Manifest(a) => cmd_manifest(a),
    })
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.to_owned(),
        source,
    }
}

fn records_err(path: &Path) -> impl Fn(JsonlError) -> CliError + '_ {
    move |source| CliError::Records {
        path: path.to_owned(),
        source,
    }
}

fn is_stdio(path: &Path) -> bool {
    path.as_os_str() == "-"
}

fn open_in(path: &Path) -> Result<Box<dyn BufRead>> {
    if is_stdio(path) {
        return Ok(Box::new(BufReader::new(io::stdin())));
    }
    let f = File::open(path).map_err(io_err(path))?;
    Ok(Box::new(BufReader::new(f)))
}

fn create_out(path: &Path) -> Result<Box<dyn Write>> {
    if is_stdio(path) {
        return Ok(Box::new(BufWriter::new(io::stdout())));
    }
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(io_err(dir))?;
    }
    let f = File::create(path).map_err(io_err(path))?;
    Ok(Box::new(BufWriter::new(f)))
}

fn write_rec<T: Serialize>(out: &mut dyn Write, rec: &T, path: &Path) -> Result<()> {
    jsonl::write_record(&mut &mut *out, rec).map_err(io_err(path))
}

fn finish(mut out: Box<dyn Write>, path: &Path) -> Result<()> {
    out.flush().map_err(io_err(path))
}

#[derive(Serialize)]
struct DocFailure<'a> {
    doc: &'a str,
    error: String,
}

fn report_failure(doc: &str, error: &dyn std::fmt::Display) {
    let rec = DocFailure {
        doc,
        error: error.to_string(),
    };
    if let Ok(s) = serde_json::to_string(&rec) {
        eprintln!("{s}");
    }
}

/// Maps `f` over `items` in parallel batches and hands the results to
/// `sink` in input order.
fn ordered_map<T, U, F, S>(items: impl Iterator<Item = T>, f: F, mut sink: S) -> Result<()>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync,
    S: FnMut(U) -> Result<()>,
{
    let batch = rayon::current_num_threads().max(1) * 4;
    let mut items = items.peekable();
    while items.peek().is_some() {
        let chunk: Vec<T> = items.by_ref().take(batch).collect();
        let done: Vec<U> = chunk.into_par_iter().map(&f).collect();
        for u in done {
            sink(u)?;
        }
    }
    Ok(())
}

fn layout_config(flags: &LayoutFlags, config: &Config) -> LayoutConfig {
    LayoutConfig {
        line_tolerance: flags.line_tolerance.unwrap_or(config.layout.line_tolerance),
        word_gap: flags.word_gap.unwrap_or(config.layout.word_gap),
    }
}

fn train_params(flags: &TrainFlags, config: &Config) -> TrainParams {
    let mut p = config.train_params();
    if let Some(v) = flags.lr_lambda {
        p.lr.lambda = v;
    }
    if let Some(v) = flags.lr_max_iters {
        p.lr.max_iters = v;
    }
    if let Some(v) = flags.lr_tol {
        p.lr.tol = v;
    }
    if let Some(v) = flags.svm_c {
        p.svm.c = v;
    }
    if let Some(v) = flags.svm_epochs {
        p.svm.epochs = v;
    }
    if let Some(v) = flags.nb_step {
        p.nb.step = v;
    }
    if let Some(v) = flags.nb_alpha {
        p.nb.alpha = v;
    }
    p
}

fn check_train_params(p: &TrainParams) -> Result<()> {
    let bad = |what: &str| Err(CliError::Usage(what.to_string()));
    if !(p.lr.lambda >= 0.0) {
        return bad("--lr-lambda must be non-negative");
    }
    if !(p.svm.c > 0.0) {
        return bad("--svm-c must be positive");
    }
    if p.svm.epochs == 0 {
        return bad("--svm-epochs must be at least 1");
    }
    if !(p.nb.step > 0.0 && p.nb.step <= 1.0) {
        return bad("--nb-step must lie in (0, 1]");
    }
    if !(p.nb.alpha > 0.0) {
        return bad("--nb-alpha must be positive");
    }
    Ok(())
}

fn ne_tagger(config: &Config) -> Result<Option<NeTagger>> {
    if config.gazetteers.is_empty() {
        return Ok(None);
    }
    config.gazetteers.load().map(Some).map_err(|source| CliError::Io {
        path: PathBuf::from("gazetteer"),
        source,
    })
}

fn load_annotations(path: Option<&Path>) -> Result<Option<HashMap<LineKey, LineAnnotation>>> {
    path.map(|p| read_annotations(open_in(p)?).map_err(records_err(p)))
        .transpose()
}

fn key_string(k: &LineKey) -> String {
    format!("{}/{}/{}", k.doc_id, k.page, k.line_idx)
}

fn featurize_pages(
    featurizer: &Featurizer<'_>,
    pages: &[Vec<Line>],
    annotations: Option<&HashMap<LineKey, LineAnnotation>>,
) -> Result<Vec<Vec<crate::features::FeatureVector>>> {
    pages
        .iter()
        .map(|page| {
            featurizer.featurize_page(page, annotations).map_err(|source| {
                // report the first line whose annotation disagrees
                let key = page
                    .iter()
                    .find(|l| {
                        annotations
                            .and_then(|a| a.get(&l.key()))
                            .is_some_and(|a| a.pos.len() != l.words.len() || a.ne.len() != l.words.len())
                    })
                    .map(|l| key_string(&l.key()))
                    .unwrap_or_default();
                CliError::Feature { key, source }
            })
        })
        .collect()
}

/// Document streams of a lines file.
fn lines_by_document(path: &Path) -> Result<impl Iterator<Item = Result<Vec<Line>>> + '_> {
    let input = open_in(path)?;
    Ok(group_documents(read_lines_jsonl(input)).map(move |d| d.map_err(records_err(path))))
}

// extract

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum InputKind {
    Pdf,
    Chars,
    Lines,
}

fn sniff(path: &Path) -> io::Result<InputKind> {
    if path
        .extension()
        .and_then(|e| e.to_str())
        .is_some_and(|e| e.eq_ignore_ascii_case("pdf"))
    {
        return Ok(InputKind::Pdf);
    }
    let mut r = BufReader::new(File::open(path)?);
    let mut head = [0u8; 5];
    let n = r.read(&mut head)?;
    if &head[..n] == b"%PDF-" {
        return Ok(InputKind::Pdf);
    }
    let mut first = String::from_utf8_lossy(&head[..n]).into_owned();
    loop {
        let mut line = String::new();
        if r.read_line(&mut line)? == 0 {
            break;
        }
        first.push_str(&line);
        if !first.trim().is_empty() {
            break;
        }
        first.clear();
    }
    let is_lines = serde_json::from_str::<serde_json::Value>(first.trim())
        .ok()
        .and_then(|v| v.as_object().map(|o| o.contains_key("words")))
        .unwrap_or(false);
    Ok(if is_lines {
        InputKind::Lines
    } else {
        InputKind::Chars
    })
}

fn extract_one(path: &Path, layout: &LayoutConfig) -> std::result::Result<Vec<Line>, String> {
    let kind = sniff(path).map_err(|e| e.to_string())?;
    match kind {
        InputKind::Pdf => {
            let bytes = std::fs::read(path).map_err(|e| e.to_string())?;
            let mut doc = parse_pdf(&bytes).map_err(|e| e.to_string())?;
            doc.doc_id = path
                .file_stem()
                .and_then(|s| s.to_str())
                .unwrap_or("doc")
                .to_owned();
            Ok(assemble_lines(&doc, layout).into_iter().flatten().collect())
        }
        InputKind::Chars => {
            let f = File::open(path).map_err(|e| e.to_string())?;
            let doc = read_richchar_jsonl(BufReader::new(f)).map_err(|e: IngestError| e.to_string())?;
            doc.validate()?;
            Ok(assemble_lines(&doc, layout).into_iter().flatten().collect())
        }
        InputKind::Lines => {
            let f = File::open(path).map_err(|e| e.to_string())?;
            let lines = read_lines_jsonl(BufReader::new(f))
                .collect::<std::result::Result<Vec<Line>, _>>()
                .map_err(|e| e.to_string())?;
            for l in &lines {
                l.validate()
                    .map_err(|e| format!("{}: {e}", key_string(&l.key())))?;
            }
            Ok(lines)
        }
    }
}

fn expand_inputs(inputs: &[PathBuf]) -> Result<Vec<PathBuf>> {
    let mut out = Vec::new();
    for p in inputs {
        if p.is_dir() {
            let mut found: Vec<PathBuf> = std::fs::read_dir(p)
                .map_err(io_err(p))?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|f| {
                    f.is_file()
                        && f.extension()
                            .and_then(|e| e.to_str())
                            .is_some_and(|e| e.eq_ignore_ascii_case("pdf") || e.eq_ignore_ascii_case("jsonl"))
                })
                .collect();
            found.sort();
            out.extend(found);
        } else {
            out.push(p.clone());
        }
    }
    Ok(out)
}

pub fn cmd_extract(args: &ExtractArgs, config: &Config) -> Result<Exit> {
    if args.inputs.is_empty() {
        return Err(CliError::Usage("extract needs at least one input".into()));
    }
    let inputs = expand_inputs(&args.inputs)?;
    if inputs.is_empty() {
        return Err(CliError::Usage("no PDF or JSONL files among the inputs".into()));
    }
    let layout = layout_config(&args.layout, config);
    let mut out = create_out(&args.out)?;
    let (mut ok, mut failed) = (0usize, 0usize);
    ordered_map(
        inputs.iter(),
        |p| (p, extract_one(p, &layout)),
        |(p, res)| {
            match res {
                Ok(lines) => {
                    ok += 1;
                    for l in &lines {
                        write_rec(&mut *out, l, &args.out)?;
                    }
                }
                Err(e) => {
                    failed += 1;
                    report_failure(&p.display().to_string(), &e);
                }
            }
            Ok(())
        },
    )?;
    finish(out, &args.out)?;
    Ok(match (ok, failed) {
        (_, 0) => Exit::Success,
        (0, _) => Exit::Fatal,
        _ => Exit::Partial,
    })
}

// weaklabel

pub fn cmd_weaklabel(args: &WeaklabelArgs, config: &Config) -> Result<Exit> {
    let mut cfg = config.weak.clone();
    if let Some(k) = args.weak.k {
        cfg.k = k;
    }
    if let Some(m) = args.weak.min_group {
        cfg.min_group_size = m;
    }
    cfg.validate().map_err(|e| CliError::Usage(e.to_string()))?;
    let mut out = create_out(&args.out)?;
    let mut stats = WeakLabelStats::default();
    ordered_map(
        lines_by_document(&args.lines)?,
        |doc| doc.map(|lines| weak_label_document(&group_pages(lines), &cfg)),
        |res| {
            let (labeled, s) = res?;
            stats.merge(&s);
            for l in &labeled {
                write_rec(&mut *out, l, &args.out)?;
            }
            Ok(())
        },
    )?;
    finish(out, &args.out)?;
    eprintln!(
        "documents={} captions={} skipped={} emitted={} positives={} negatives={}",
        stats.documents,
        stats.captions,
        stats.skipped_captions,
        stats.positives + stats.negatives,
        stats.positives,
        stats.negatives
    );
    if stats.captions == 0 {
        eprintln!("warning: no table captions found; no weak labels written");
    }
    Ok(Exit::Success)
}

// featurize

pub fn cmd_featurize(args: &FeaturizeArgs, config: &Config) -> Result<Exit> {
    let mask = args.features.or(config.features).unwrap_or_default();
    let annotations = load_annotations(args.annotations.as_deref())?;
    let tagger = ne_tagger(config)?;
    let featurizer = Featurizer {
        pos: PosTagger::builtin(),
        ne: tagger.as_ref().unwrap_or(NeTagger::builtin()),
    };
    let mut out = create_out(&args.out)?;
    ordered_map(
        lines_by_document(&args.lines)?,
        |doc| {
            let pages = group_pages(doc?);
            let vectors = featurize_pages(&featurizer, &pages, annotations.as_ref())?;
            Ok::<_, CliError>((pages, vectors))
        },
        |res| {
            let (pages, vectors) = res?;
            for (page, vs) in pages.iter().zip(&vectors) {
                for (l, v) in page.iter().zip(vs) {
                    write_rec(&mut *out, &FeatureRecord::new(l, mask, v), &args.out)?;
                }
            }
            Ok(())
        },
    )?;
    finish(out, &args.out)?;
    Ok(Exit::Success)
}

// train

fn project(rec: &FeatureRecord, mask: FeatureMask) -> Result<Vec<f64>> {
    rec.project(mask).map(<[f64]>::to_vec).ok_or_else(|| {
        CliError::MaskMismatch(format!(
            "{} carries {} features but {} are required",
            key_string(&rec.key()),
            rec.features.as_str(),
            mask.as_str()
        ))
    })
}

pub fn cmd_train(args: &TrainArgs, config: &Config) -> Result<Exit> {
    let mask = args.features.or(config.features).unwrap_or_default();
    let params = train_params(&args.params, config);
    check_train_params(&params)?;
    let annotations = load_annotations(args.annotations.as_deref())?;
    let tagger = ne_tagger(config)?;
    let featurizer = Featurizer {
        pos: PosTagger::builtin(),
        ne: tagger.as_ref().unwrap_or(NeTagger::builtin()),
    };

    let mut features: HashMap<LineKey, Vec<f64>> = HashMap::new();
    let labels: Vec<(LineKey, crate::labels::Label)>;
    if args.vectors.is_some() || args.lines.is_some() {
        labels = jsonl::records::<LabelRecord, _>(open_in(&args.labeled)?)
            .map(|r| r.map(|r| (r.key(), r.label)))
            .collect::<std::result::Result<_, _>>()
            .map_err(records_err(&args.labeled))?;
        let wanted: HashSet<&LineKey> = labels.iter().map(|(k, _)| k).collect();
        if let Some(vpath) = &args.vectors {
            for rec in jsonl::records::<FeatureRecord, _>(open_in(vpath)?) {
                let rec = rec.map_err(records_err(vpath))?;
                let key = rec.key();
                if wanted.contains(&key) {
                    features.insert(key, project(&rec, mask)?);
                }
            }
        } else if let Some(lpath) = &args.lines {
            let docs: HashSet<&str> = labels.iter().map(|(k, _)| k.doc_id.as_str()).collect();
            for doc in lines_by_document(lpath)? {
                let doc = doc?;
                if !docs.contains(doc[0].doc_id.as_str()) {
                    continue;
                }
                let pages = group_pages(doc);
                for (page, vs) in
                    pages
                        .iter()
                        .zip(featurize_pages(&featurizer, &pages, annotations.as_ref())?)
                {
                    for (l, v) in page.iter().zip(vs) {
                        let key = l.key();
                        if wanted.contains(&key) {
                            features.insert(key, mask.project(&v));
                        }
                    }
                }
            }
        }
    } else {
        // without context, a page is whatever labeled lines it has
        let labeled: Vec<LabeledLine> = jsonl::records(open_in(&args.labeled)?)
            .collect::<std::result::Result<_, _>>()
            .map_err(records_err(&args.labeled))?;
        labels = labeled.iter().map(|l| (l.key(), l.label)).collect();
        let mut seen = HashSet::new();
        let unique: Vec<Line> = labeled
            .into_iter()
            .filter(|l| seen.insert(l.key()))
            .map(|l| l.line)
            .collect();
        let mut sorted = unique;
        sorted.sort_by_key(|a| a.key());
        let pages = group_pages(sorted);
        for (page, vs) in pages
            .iter()
            .zip(featurize_pages(&featurizer, &pages, annotations.as_ref())?)
        {
            for (l, v) in page.iter().zip(vs) {
                features.insert(l.key(), mask.project(&v));
            }
        }
    }

    let mut rows = Vec::with_capacity(labels.len());
    let mut ys = Vec::with_capacity(labels.len());
    for (k, y) in &labels {
        let x = features
            .get(k)
            .ok_or_else(|| CliError::Missing(format!("no features for labeled line {}", key_string(k))))?;
        rows.push(x.clone());
        ys.push(*y);
    }
    let model = EnsembleModel::train(&Dataset::new(rows, ys), mask, &params)?;
    model.save(&args.out)?;
    eprintln!(
        "trained on {} lines ({} table, {} non-table) with {}",
        model.metadata.examples,
        model.metadata.positives,
        model.metadata.negatives,
        mask.as_str()
    );
    Ok(Exit::Success)
}

// predict

pub fn cmd_predict(args: &PredictArgs, config: &Config) -> Result<Exit> {
    let voter = args.voter.voter();
    let model = match (&args.model, voter) {
        (Some(p), _) => Some(EnsembleModel::load(p)?),
        (None, None) => None,
        (None, Some(_)) => {
            return Err(CliError::Usage(
                "--model is required unless --voter baseline".into(),
            ))
        }
    };
    let mut out = create_out(&args.out)?;

    if let Some(vpath) = &args.vectors {
        let (Some(model), Some(voter)) = (&model, voter) else {
            return Err(CliError::Usage(
                "--voter baseline needs lines, not feature vectors".into(),
            ));
        };
        let mask = model.feature_config.mask;
        for rec in jsonl::records::<FeatureRecord, _>(open_in(vpath)?) {
            let rec = rec.map_err(records_err(vpath))?;
            let label = model.predict_row(&project(&rec, mask)?, voter);
            let out_rec = LabelRecord {
                doc_id: rec.doc_id,
                page: rec.page,
                line_idx: rec.line_idx,
                label,
                source: voter.source(),
            };
            write_rec(&mut *out, &out_rec, &args.out)?;
        }
        finish(out, &args.out)?;
        return Ok(Exit::Success);
    }

    let lines_path = args
        .lines
        .as_ref()
        .ok_or_else(|| CliError::Usage("predict needs a lines file or --vectors".into()))?;
    let annotations = load_annotations(args.annotations.as_deref())?;
    let tagger = ne_tagger(config)?;
    let featurizer = Featurizer {
        pos: PosTagger::builtin(),
        ne: tagger.as_ref().unwrap_or(NeTagger::builtin()),
    };
    ordered_map(
        lines_by_document(lines_path)?,
        |doc| -> Result<Vec<LabeledLine>> {
            let pages = group_pages(doc?);
            let (Some(model), Some(voter)) = (&model, voter) else {
                return Ok(heuristic_labeled(&pages));
            };
            let mask = model.feature_config.mask;
            let vectors = featurize_pages(&featurizer, &pages, annotations.as_ref())?;
            Ok(pages
                .iter()
                .zip(&vectors)
                .flat_map(|(page, vs)| page.iter().zip(vs))
                .map(|(l, v)| LabeledLine {
                    line: l.clone(),
                    label: model.predict_row(&mask.project(v), voter),
                    source: voter.source(),
                    caption: None,
                })
                .collect())
        },
        |res| {
            for l in &res? {
                write_rec(&mut *out, l, &args.out)?;
            }
            Ok(())
        },
    )?;
    finish(out, &args.out)?;
    Ok(Exit::Success)
}

// evaluate

fn read_label_records(paths: &[PathBuf]) -> Result<Vec<LabelRecord>> {
    let mut out = Vec::new();
    for p in paths {
        let files = if p.is_dir() {
            expand_inputs(std::slice::from_ref(p))?
        } else {
            vec![p.clone()]
        };
        for f in files {
            for r in jsonl::records::<LabelRecord, _>(open_in(&f)?) {
                out.push(r.map_err(records_err(&f))?);
            }
        }
    }
    Ok(out)
}

pub fn cmd_evaluate(args: &EvaluateArgs) -> Result<Vec<MetricsReport>> {
    if !args.names.is_empty() && args.names.len() != args.preds.len() {
        return Err(CliError::Usage("give one --name per --pred".into()));
    }
    let gold = read_label_records(&args.gold)?;
    let gold_keys: HashSet<LineKey> = gold.iter().map(LabelRecord::key).collect();
    let mut reports = Vec::new();
    for (i, p) in args.preds.iter().enumerate() {
        let pred = read_label_records(std::slice::from_ref(p))?;
        let name = match args.names.get(i) {
            Some(n) => n.clone(),
            None => pred
                .first()
                .and_then(|r| serde_json::to_value(r.source).ok())
                .and_then(|v| v.as_str().map(str::to_owned))
                .unwrap_or_else(|| {
                    p.file_stem()
                        .and_then(|s| s.to_str())
                        .unwrap_or("model")
                        .to_owned()
                }),
        };
        let pairs = pred
            .iter()
            .map(|r| (r.key(), r.label))
            .filter(|(k, _)| !args.allow_extra || gold_keys.contains(k));
        let counts = count_confusion_keyed(pairs, gold.iter().map(|r| (r.key(), r.label)))?;
        reports.push(compute_metrics(counts, &args.dataset, &name)?);
    }
    print!("{}", render_table(&reports));
    if let Some(path) = &args.report {
        let json = if reports.len() == 1 {
            serde_json::to_string_pretty(&reports[0])
        } else {
            serde_json::to_string_pretty(&reports)
        }
        .map_err(|e| CliError::Io {
            path: path.clone(),
            source: e.into(),
        })?;
        let mut out = create_out(path)?;
        out.write_all(json.as_bytes())
            .and_then(|_| out.write_all(b"\n"))
            .map_err(io_err(path))?;
        finish(out, path)?;
    }
    Ok(reports)
}

// pipeline

/// Output files of a pipeline run, relative to its work directory.
pub mod files {
    pub const TRAIN_LINES: &str = "train.lines.jsonl";
    pub const TEST_LINES: &str = "test.lines.jsonl";
    pub const WEAK: &str = "weak.jsonl";
    pub const TRAIN_FEATURES: &str = "train.features.jsonl";
    pub const MODEL: &str = "model.json";
    pub const PREDICTIONS: &str = "predictions.jsonl";
    pub const BASELINE: &str = "baseline.jsonl";
    pub const REPORT: &str = "report.json";
    pub const MANIFEST: &str = "manifest.json";
}

pub fn cmd_pipeline(args: &PipelineArgs, config: &Config) -> Result<Exit> {
    let root = &args.corpus;
    let work = &args.work;
    std::fs::create_dir_all(work).map_err(io_err(work))?;
    let manifest = if root.join(crate::corpus::MANIFEST_FILE).exists() {
        CorpusManifest::load(root)?
    } else {
        build_manifest(root, args.split, args.seed)?
    };
    manifest.save(work)?;
    let inputs = |role| {
        manifest
            .entries(role)
            .map(|e| root.join(&e.path))
            .collect::<Vec<_>>()
    };
    let w = |name: &str| work.join(name);

    let mut status = Exit::Success;
    let mut test_partial = false;
    for (role, name) in [(Role::Train, files::TRAIN_LINES), (Role::Test, files::TEST_LINES)] {
        let code = cmd_extract(
            &ExtractArgs {
                inputs: inputs(role),
                out: w(name),
                layout: args.layout.clone(),
            },
            config,
        )?;
        match code {
            Exit::Fatal => return Err(CliError::Missing(format!("no {role:?} document could be read"))),
            Exit::Partial => {
                status = Exit::Partial;
                test_partial |= role == Role::Test;
            }
            Exit::Success => {}
        }
    }
    cmd_weaklabel(
        &WeaklabelArgs {
            lines: w(files::TRAIN_LINES),
            out: w(files::WEAK),
            weak: args.weak.clone(),
        },
        config,
    )?;
    cmd_featurize(
        &FeaturizeArgs {
            lines: w(files::TRAIN_LINES),
            out: w(files::TRAIN_FEATURES),
            features: args.features,
            annotations: None,
        },
        config,
    )?;
    cmd_train(
        &TrainArgs {
            labeled: w(files::WEAK),
            out: w(files::MODEL),
            features: args.features,
            lines: None,
            vectors: Some(w(files::TRAIN_FEATURES)),
            annotations: None,
            params: args.params.clone(),
        },
        config,
    )?;
    cmd_predict(
        &PredictArgs {
            lines: Some(w(files::TEST_LINES)),
            vectors: None,
            model: Some(w(files::MODEL)),
            out: w(files::PREDICTIONS),
            voter: args.voter,
            annotations: None,
        },
        config,
    )?;
    cmd_predict(
        &PredictArgs {
            lines: Some(w(files::TEST_LINES)),
            vectors: None,
            model: None,
            out: w(files::BASELINE),
            voter: VoterArg::Baseline,
            annotations: None,
        },
        config,
    )?;
    // test documents that failed to load have no predictions
    let extracted = if test_partial {
        Some(doc_ids(&w(files::TEST_LINES))?)
    } else {
        None
    };
    let gold: Vec<PathBuf> = manifest
        .entries(Role::Test)
        .filter(|e| extracted.as_ref().is_none_or(|ids| ids.contains(&e.doc_id)))
        .map(|e| root.join(LABELS_DIR).join(format!("{}.jsonl", e.doc_id)))
        .collect();
    if gold.iter().all(|g| g.is_file()) && !gold.is_empty() {
        cmd_evaluate(&EvaluateArgs {
            preds: vec![w(files::PREDICTIONS), w(files::BASELINE)],
            gold,
            names: vec![],
            dataset: manifest.name.clone(),
            report: Some(w(files::REPORT)),
            allow_extra: false,
        })?;
    } else {
        eprintln!(
            "no gold labels under {}; skipping evaluation",
            root.join(LABELS_DIR).display()
        );
    }
    Ok(status)
}

fn doc_ids(path: &Path) -> Result<HashSet<String>> {
    read_lines_jsonl(open_in(path)?)
        .map(|l| l.map(|l| l.doc_id).map_err(records_err(path)))
        .collect()
}

// synth, manifest

pub fn cmd_synth(args: &SynthArgs) -> Result<Exit> {
    let d = SynthConfig::default();
    let cfg = SynthConfig {
        docs: args.docs,
        seed: args.seed,
        table_gap: args.table_gap,
        prose_gap: args.prose_gap,
        jitter: args.jitter.unwrap_or(d.jitter),
        min_pages: args.min_pages.unwrap_or(d.min_pages),
        max_pages: args.max_pages.unwrap_or(d.max_pages),
        no_table_rate: args.no_table_rate.unwrap_or(d.no_table_rate),
        edge_caption_rate: args.edge_caption_rate.unwrap_or(d.edge_caption_rate),
        split_ratio: args.split.unwrap_or(d.split_ratio),
        write_chars: args.chars,
    };
    if cfg.docs < 2 {
        return Err(CliError::Usage("--docs must be at least 2".into()));
    }
    if !(cfg.table_gap > 0.0 && cfg.prose_gap > 0.0) {
        return Err(CliError::Usage("gaps must be positive".into()));
    }
    if cfg.min_pages == 0 || cfg.min_pages > cfg.max_pages {
        return Err(CliError::Usage("need 1 <= --min-pages <= --max-pages".into()));
    }
    for (name, v) in [
        ("--jitter", cfg.jitter),
        ("--no-table-rate", cfg.no_table_rate),
        ("--edge-caption-rate", cfg.edge_caption_rate),
    ] {
        if !(0.0..=1.0).contains(&v) {
            return Err(CliError::Usage(format!("{name} must lie in [0, 1]")));
        }
    }
    let stats = write_corpus(&cfg, &args.out)?;
    println!("{}", serde_json::to_string(&stats).unwrap_or_default());
    Ok(Exit::Success)
}

pub fn cmd_manifest(args: &ManifestArgs) -> Result<Exit> {
    let m = build_manifest(&args.root, args.split, args.seed)?;
    m.save(&args.root)?;
    println!(
        "{} documents: {} train, {} test",
        m.documents.len(),
        m.count(Role::Train),
        m.count(Role::Test)
    );
    Ok(Exit::Success)
}
