//! Random instances shared by the property and acceptance tests.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use tablescout::classify::ensemble::TrainingMetadata;
use tablescout::classify::{
    EnsembleModel, FeatureConfig, LrModel, NbModel, SvmModel, TrainParams, MODEL_VERSION,
};
use tablescout::features::FeatureMask;
use tablescout::ingest::{Page, PdfDocument, RichChar};
use tablescout::labels::{Label, LabelSource, LabeledLine};
use tablescout::layout::{Line, Word};

const TOKENS: &[&str] = &[
    "the",
    "model",
    "quickly",
    "results",
    "0.7321",
    "12",
    "2013",
    "Stanford",
    "London",
    "John",
    "of",
    "accuracy",
    "is",
    "detected",
    "simple",
    "Table",
    "3.5%",
    "10:30",
    "March",
    "(a)",
    "--",
    "learns",
    "é",
    "naïve",
    "Ω",
    "and",
    "we",
    "large",
    "table-based",
    "x",
];

pub fn token(rng: &mut impl Rng) -> String {
    (*TOKENS.choose(rng).unwrap()).to_owned()
}

pub fn line(rng: &mut impl Rng, doc: &str, page: usize, idx: usize, y: f64) -> Line {
    let n = rng.gen_range(1..=9);
    let mut x = rng.gen_range(20.0..120.0);
    let mut words = Vec::with_capacity(n);
    for _ in 0..n {
        let t = token(rng);
        let w = 5.0 * t.chars().count() as f64 * rng.gen_range(0.8..1.2);
        words.push(Word {
            text: t,
            x0: x,
            x1: x + w,
        });
        x += w + rng.gen_range(0.5..40.0);
    }
    Line {
        doc_id: doc.into(),
        page,
        line_idx: idx,
        y,
        dominant_font_size: [9.0, 10.0, 12.0][rng.gen_range(0..3)],
        words,
    }
}

pub fn page(rng: &mut impl Rng, doc: &str, page_no: usize, n: usize) -> Vec<Line> {
    (0..n)
        .map(|i| line(rng, doc, page_no, i, 740.0 - 13.0 * i as f64))
        .collect()
}

/// Copy of `lines` with every x coordinate multiplied by `c`.
pub fn scaled(lines: &[Line], c: f64) -> Vec<Line> {
    lines
        .iter()
        .map(|l| Line {
            words: l
                .words
                .iter()
                .map(|w| Word {
                    text: w.text.clone(),
                    x0: w.x0 * c,
                    x1: w.x1 * c,
                })
                .collect(),
            y: l.y * c,
            dominant_font_size: l.dominant_font_size * c,
            ..l.clone()
        })
        .collect()
}

pub fn labeled(rng: &mut impl Rng, l: Line) -> LabeledLine {
    let sources = [
        LabelSource::Weak,
        LabelSource::Gold,
        LabelSource::Baseline,
        LabelSource::Ensemble,
        LabelSource::Nb,
    ];
    LabeledLine {
        line: l,
        label: Label::from_sign(rng.gen_bool(0.5)),
        source: *sources.choose(rng).unwrap(),
        caption: rng
            .gen_bool(0.5)
            .then(|| (rng.gen_range(0..5), rng.gen_range(0..50))),
    }
}

pub fn document(rng: &mut impl Rng) -> PdfDocument {
    let pages = (0..rng.gen_range(0..4))
        .map(|p| {
            let (width, height) = (rng.gen_range(100.0..1000.0), rng.gen_range(100.0..1000.0));
            let chars = (0..rng.gen_range(0..40))
                .map(|_| RichChar {
                    codepoint: token(rng).chars().next().unwrap(),
                    page: p,
                    x: rng.gen_range(0.0..width),
                    y: rng.gen_range(0.0..height),
                    font_name: ["Helvetica", "Times-Roman", "F1+Subset"][rng.gen_range(0..3)].into(),
                    font_size: rng.gen_range(4.0..24.0),
                    advance: rng.gen_bool(0.7).then(|| rng.gen_range(0.0..15.0)),
                })
                .collect();
            Page { width, height, chars }
        })
        .collect();
    PdfDocument {
        doc_id: format!("doc-{}", rng.gen::<u32>()),
        pages,
    }
}

pub fn model(rng: &mut impl Rng) -> EnsembleModel {
    let mask = [FeatureMask::Nam, FeatureMask::NamPtd, FeatureMask::All][rng.gen_range(0..3)];
    let d = mask.dims().len();
    let step = [0.2, 0.25, 0.1][rng.gen_range(0..3)];
    let nbins = tablescout::classify::nb::num_bins(step);
    let dist = |rng: &mut dyn rand::RngCore| -> Vec<f64> {
        let raw: Vec<f64> = (0..nbins).map(|_| rng.gen_range(0.01..1.0)).collect();
        let s: f64 = raw.iter().sum();
        raw.into_iter().map(|v| v / s).collect()
    };
    let p: f64 = rng.gen_range(0.05..0.95);
    let examples = rng.gen_range(2..10_000);
    let positives = rng.gen_range(1..examples);
    EnsembleModel {
        version: MODEL_VERSION,
        feature_config: FeatureConfig { step, mask },
        lr: LrModel {
            theta: (0..d).map(|_| rng.gen_range(-10.0..10.0)).collect(),
            theta0: rng.gen_range(-5.0..5.0),
        },
        svm: SvmModel {
            w: (0..d).map(|_| rng.gen_range(-10.0..10.0)).collect(),
            b: rng.gen_range(-5.0..5.0),
        },
        nb: NbModel {
            step,
            class_prior: [p, 1.0 - p],
            cond: (0..d).map(|_| [dist(rng), dist(rng)]).collect(),
        },
        metadata: TrainingMetadata {
            examples,
            positives,
            negatives: examples - positives,
            params: TrainParams::default(),
        },
    }
}
