mod common;

use std::io::BufReader;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tablescout::baseline::{compute_document_stats, is_sparse_line, DocumentStats};
use tablescout::classify::{
    lr, majority, nb, svm, Dataset, EnsembleModel, LrParams, NbParams, SvmParams, TrainParams, Voter,
};
use tablescout::eval::{compute_metrics, count_confusion};
use tablescout::features::{compute_nam, FeatureMask, Featurizer};
use tablescout::labels::{read_labeled_jsonl, write_labeled_jsonl, Label};
use tablescout::layout::{read_lines_jsonl, word_margins, write_lines_jsonl, Line, Word};
use tablescout::weak::{find_caption_lines, weak_label_document, WeakLabelConfig};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_data(r: &mut ChaCha8Rng, n: usize, d: usize) -> Dataset {
    let mut labels: Vec<Label> = (0..n).map(|_| Label::from_sign(r.gen_bool(0.5))).collect();
    labels[0] = Label::Table;
    labels[1] = Label::NonTable;
    let rows = (0..n)
        .map(|_| (0..d).map(|_| r.gen_range(0.0..=1.0)).collect())
        .collect();
    Dataset::new(rows, labels)
}

fn caption_line(doc: &str, idx: usize, y: f64) -> Line {
    let words = ["Table", "2:", "Results"]
        .iter()
        .enumerate()
        .map(|(i, t)| Word {
            text: (*t).into(),
            x0: 72.0 + 40.0 * i as f64,
            x1: 100.0 + 40.0 * i as f64,
        })
        .collect();
    Line {
        doc_id: doc.into(),
        page: 0,
        line_idx: idx,
        y,
        dominant_font_size: 10.0,
        words,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lines_and_labels_round_trip(seed in any::<u64>(), n in 0usize..20) {
        let mut r = rng(seed);
        let lines = common::page(&mut r, "d", 2, n);
        let mut buf = Vec::new();
        write_lines_jsonl(&lines, &mut buf).unwrap();
        let back: Vec<Line> = read_lines_jsonl(BufReader::new(&buf[..])).collect::<Result<_, _>>().unwrap();
        prop_assert_eq!(&back, &lines);

        let labeled: Vec<_> = lines.into_iter().map(|l| common::labeled(&mut r, l)).collect();
        let mut buf = Vec::new();
        write_labeled_jsonl(&labeled, &mut buf).unwrap();
        let back: Vec<_> = read_labeled_jsonl(BufReader::new(&buf[..])).collect::<Result<_, _>>().unwrap();
        prop_assert_eq!(back, labeled);
    }

    #[test]
    fn model_json_round_trip(seed in any::<u64>()) {
        let m = common::model(&mut rng(seed));
        let back = EnsembleModel::from_json(&m.to_json()).unwrap();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn feature_ranges(seed in any::<u64>(), n in 1usize..15) {
        let page = common::page(&mut rng(seed), "d", 0, n);
        for v in Featurizer::default().featurize_page(&page, None).unwrap() {
            prop_assert!((0.0..=1.0).contains(&v.nam));
            prop_assert!((v.ptd.iter().sum::<f64>() - 1.0).abs() < 1e-12);
            prop_assert!(v.ptd.iter().all(|p| (0.0..=1.0).contains(p)));
            prop_assert!(v.nep.iter().all(|p| (0.0..=1.0).contains(p)));
            prop_assert!(v.nep.iter().sum::<f64>() <= 1.0 + 1e-12);
        }
    }

    #[test]
    fn nam_ignores_scale(seed in any::<u64>(), n in 1usize..15, c in 0.1f64..10.0) {
        let page = common::page(&mut rng(seed), "d", 0, n);
        let scaled = common::scaled(&page, c);
        for (a, b) in page.iter().zip(&scaled) {
            prop_assert_eq!(compute_nam(a, &page).to_bits(), compute_nam(b, &scaled).to_bits());
        }
    }

    #[test]
    fn nam_ignores_line_order(seed in any::<u64>(), n in 1usize..15) {
        let mut r = rng(seed);
        let page = common::page(&mut r, "d", 0, n);
        let mut shuffled = page.clone();
        shuffled.shuffle(&mut r);
        for l in &page {
            prop_assert_eq!(compute_nam(l, &page), compute_nam(l, &shuffled));
        }
    }

    #[test]
    fn sparse_rule_ignores_scale(seed in any::<u64>(), n in 1usize..15, c in 0.1f64..10.0) {
        let page = common::page(&mut rng(seed), "d", 0, n);
        let scaled = common::scaled(&page, c);
        let (s1, s2) = (compute_document_stats(&page), compute_document_stats(&scaled));
        for (a, b) in page.iter().zip(&scaled) {
            prop_assert_eq!(is_sparse_line(a, &s1), is_sparse_line(b, &s2));
        }
    }

    #[test]
    fn widening_the_largest_gap_keeps_a_line_sparse(seed in any::<u64>(), extra in 0.0f64..50.0) {
        let mut r = rng(seed);
        let line = common::line(&mut r, "d", 0, 0, 700.0);
        prop_assume!(line.words.len() > 1);
        // width criterion off, so only gaps matter
        let stats = DocumentStats { avg_line_width: 0.0, avg_word_gap: r.gen_range(1.0..20.0) };
        let gaps = word_margins(&line);
        let widest = (0..gaps.len()).max_by(|&a, &b| gaps[a].total_cmp(&gaps[b])).unwrap();
        let mut wider = line.clone();
        for w in &mut wider.words[widest + 1..] {
            w.x0 += extra;
            w.x1 += extra;
        }
        if is_sparse_line(&line, &stats) {
            prop_assert!(is_sparse_line(&wider, &stats));
        }
    }

    #[test]
    fn weak_labels_stay_near_their_caption(seed in any::<u64>(), n in 3usize..30, k in 1usize..6, min_group in 1usize..4) {
        let mut r = rng(seed);
        let mut page = common::page(&mut r, "d", 0, n);
        for _ in 0..r.gen_range(1..3) {
            let at = r.gen_range(0..n);
            let y = page[at].y;
            page[at] = caption_line("d", at, y);
        }
        let cfg = WeakLabelConfig { k, min_group_size: min_group, ..Default::default() };
        let captions = find_caption_lines(&page, &cfg);
        let (labels, stats) = weak_label_document(std::slice::from_ref(&page), &cfg);
        prop_assert_eq!(stats.positives + stats.negatives, labels.len());
        for &c in &captions {
            let mine: Vec<_> = labels.iter().filter(|l| l.caption == Some((0, c))).collect();
            if mine.is_empty() {
                continue;
            }
            prop_assert!(mine.iter().all(|l| l.line.line_idx != c));
            prop_assert!(mine.iter().all(|l| l.line.line_idx.abs_diff(c) <= k));
            let up: Vec<Label> = mine.iter().filter(|l| l.line.line_idx < c).map(|l| l.label).collect();
            let down: Vec<Label> = mine.iter().filter(|l| l.line.line_idx > c).map(|l| l.label).collect();
            prop_assert!(up.len() >= min_group && down.len() >= min_group);
            prop_assert!(up.iter().all(|l| *l == up[0]));
            prop_assert!(down.iter().all(|l| *l == up[0].flip()));
        }
    }

    #[test]
    fn nb_posteriors_sum_to_one(seed in any::<u64>(), n in 2usize..60, d in 1usize..5, step in prop::sample::select(vec![0.1, 0.2, 0.25, 0.5])) {
        let mut r = rng(seed);
        let data = random_data(&mut r, n, d);
        let m = nb::train(&data, &NbParams { step, alpha: 1.0 }).unwrap();
        for _ in 0..10 {
            let x: Vec<f64> = (0..d).map(|_| r.gen_range(0.0..=1.0)).collect();
            let [pos, neg] = m.log_joint(&x);
            let p = nb::posterior(pos, neg);
            prop_assert!((p + nb::posterior(neg, pos) - 1.0).abs() < 1e-12);
            let (label, q) = m.predict(&x);
            prop_assert_eq!(p, q);
            if label.is_table() {
                prop_assert!(p > 0.5);
            }
        }
        for per_class in &m.cond {
            for dist in per_class {
                prop_assert!((dist.iter().sum::<f64>() - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn lr_objective_never_decreases(seed in any::<u64>(), n in 2usize..60, d in 1usize..6) {
        let data = random_data(&mut rng(seed), n, d);
        let (_, trace) = lr::train_traced(&data, &LrParams { max_iters: 100, ..Default::default() }).unwrap();
        for w in trace.windows(2) {
            prop_assert!(w[1] >= w[0], "{} then {}", w[0], w[1]);
        }
    }

    #[test]
    fn svm_beats_the_zero_model(seed in any::<u64>(), n in 2usize..40, d in 1usize..6) {
        let data = random_data(&mut rng(seed), n, d);
        let params = SvmParams { epochs: 100, ..Default::default() };
        let m = svm::train(&data, &params).unwrap();
        let zero = svm::SvmModel { w: vec![0.0; d], b: 0.0 };
        prop_assert!(svm::objective(&data, &m, params.c) <= svm::objective(&data, &zero, params.c));
    }

    #[test]
    fn ensemble_is_majority_of_members(seed in any::<u64>(), n in 2usize..40) {
        let mut r = rng(seed);
        let data = random_data(&mut r, n, 6);
        let params = TrainParams { svm: SvmParams { epochs: 20, ..Default::default() }, ..Default::default() };
        let m = EnsembleModel::train(&data, FeatureMask::NamPtd, &params).unwrap();
        for _ in 0..20 {
            let x: Vec<f64> = (0..6).map(|_| r.gen_range(0.0..=1.0)).collect();
            let votes = [m.predict_row(&x, Voter::Lr), m.predict_row(&x, Voter::Svm), m.predict_row(&x, Voter::Nb)];
            prop_assert_eq!(m.predict_row(&x, Voter::Ensemble), majority(votes));
        }
    }

    #[test]
    fn metric_invariants(pairs in prop::collection::vec((any::<bool>(), any::<bool>()), 1..200)) {
        let pred: Vec<Label> = pairs.iter().map(|p| Label::from_sign(p.0)).collect();
        let gold: Vec<Label> = pairs.iter().map(|p| Label::from_sign(p.1)).collect();
        let c = count_confusion(&pred, &gold).unwrap();
        let m = compute_metrics(c, "d", "m").unwrap();
        prop_assert_eq!(c.total(), pairs.len() as u64);
        prop_assert!((m.accuracy * c.total() as f64 - (c.tp + c.tn) as f64).abs() < 1e-9);
        if let (Some(p), Some(r), Some(f)) = (m.precision.0, m.recall.0, m.f1.0) {
            prop_assert!(f <= p.max(r) + 1e-12);
            prop_assert!(f >= p.min(r) - 1e-12);
        }
        let flip = |v: &[Label]| v.iter().map(|l| l.flip()).collect::<Vec<_>>();
        let s = count_confusion(&flip(&pred), &flip(&gold)).unwrap();
        prop_assert_eq!((s.tp, s.fp, s.fn_, s.tn), (c.tn, c.fn_, c.fp, c.tp));
    }
}
