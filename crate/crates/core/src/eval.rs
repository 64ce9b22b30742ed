//! Confusion counts, accuracy/precision/recall/F1, and report rendering.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::labels::Label;
use crate::layout::LineKey;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfusionCounts {
    pub tp: u64,
    pub fp: u64,
    #[serde(rename = "fn")]
    pub fn_: u64,
    pub tn: u64,
}

impl ConfusionCounts {
    pub fn total(&self) -> u64 {
        self.tp + self.fp + self.fn_ + self.tn
    }

    pub fn add(&mut self, pred: Label, gold: Label) {
        match (pred.is_table(), gold.is_table()) {
            (true, true) => self.tp += 1,
            (true, false) => self.fp += 1,
            (false, true) => self.fn_ += 1,
            (false, false) => self.tn += 1,
        }
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum EvalError {
    #[error("prediction and gold lists differ in length ({pred} vs {gold})")]
    LengthMismatch { pred: usize, gold: usize },
    #[error("no prediction for gold line {0:?}")]
    MissingPrediction(LineKey),
    #[error("prediction for line {0:?} has no gold label")]
    UnexpectedPrediction(LineKey),
    #[error("duplicate label for line {0:?}")]
    Duplicate(LineKey),
    #[error("cannot compute metrics from zero examples")]
    EmptyCounts,
}

pub fn count_confusion(pred: &[Label], gold: &[Label]) -> Result<ConfusionCounts, EvalError> {
    if pred.len() != gold.len() {
        return Err(EvalError::LengthMismatch {
            pred: pred.len(),
            gold: gold.len(),
        });
    }
    let mut c = ConfusionCounts::default();
    for (p, g) in pred.iter().zip(gold) {
        c.add(*p, *g);
    }
    Ok(c)
}

/// Counts over lines matched by key. Every gold line needs exactly one
/// prediction and vice versa.
pub fn count_confusion_keyed(
    pred: impl IntoIterator<Item = (LineKey, Label)>,
    gold: impl IntoIterator<Item = (LineKey, Label)>,
) -> Result<ConfusionCounts, EvalError> {
    let mut by_key: HashMap<LineKey, Label> = HashMap::new();
    for (k, l) in pred {
        if by_key.insert(k.clone(), l).is_some() {
            return Err(EvalError::Duplicate(k));
        }
    }
    let mut c = ConfusionCounts::default();
    let mut seen = 0;
    let mut gold_keys = std::collections::HashSet::new();
    for (k, g) in gold {
        if !gold_keys.insert(k.clone()) {
            return Err(EvalError::Duplicate(k));
        }
        let p = *by_key
            .get(&k)
            .ok_or_else(|| EvalError::MissingPrediction(k.clone()))?;
        c.add(p, g);
        seen += 1;
    }
    if seen != by_key.len() {
        let mut extra: Vec<&LineKey> = by_key.keys().filter(|k| !gold_keys.contains(*k)).collect();
        extra.sort();
        return Err(EvalError::UnexpectedPrediction(extra[0].clone()));
    }
    Ok(c)
}

/// A metric value, or `None` when its denominator is zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Metric(pub Option<f64>);

impl Serialize for Metric {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0 {
            Some(v) => s.serialize_f64(v),
            None => s.serialize_str("n/a"),
        }
    }
}

impl<'de> Deserialize<'de> for Metric {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(Metric(Some(v))),
            Raw::Str(s) if s == "n/a" => Ok(Metric(None)),
            Raw::Str(s) => Err(serde::de::Error::custom(format!(
                "expected number or \"n/a\", got {s:?}"
            ))),
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Some(v) => write!(f, "{v:.4}"),
            None => f.write_str("n/a"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricsReport {
    pub dataset: String,
    pub model: String,
    pub counts: ConfusionCounts,
    pub accuracy: f64,
    pub precision: Metric,
    pub recall: Metric,
    pub f1: Metric,
}

pub fn compute_metrics(
    counts: ConfusionCounts,
    dataset: &str,
    model: &str,
) -> Result<MetricsReport, EvalError> {
    let total = counts.total();
    if total == 0 {
        return Err(EvalError::EmptyCounts);
    }
    let ratio = |num: u64, den: u64| (den > 0).then(|| num as f64 / den as f64);
    let precision = ratio(counts.tp, counts.tp + counts.fp);
    let recall = ratio(counts.tp, counts.tp + counts.fn_);
    let f1 = match (precision, recall) {
        (Some(p), Some(r)) if p + r > 0.0 => Some(2.0 * p * r / (p + r)),
        _ => None,
    };
    Ok(MetricsReport {
        dataset: dataset.into(),
        model: model.into(),
        counts,
        accuracy: (counts.tp + counts.tn) as f64 / total as f64,
        precision: Metric(precision),
        recall: Metric(recall),
        f1: Metric(f1),
    })
}

/// Fixed-width table with one row per report.
pub fn render_table(reports: &[MetricsReport]) -> String {
    let width = reports
        .iter()
        .map(|r| r.model.chars().count())
        .chain(["Method".len()])
        .max()
        .unwrap_or(6);
    let mut out = format!(
        "{:<width$}  {:>9}  {:>9}  {:>9}  {:>10}\n",
        "Method", "Accuracy", "Precision", "Recall", "F1-measure"
    );
    for r in reports {
        out.push_str(&format!(
            "{:<width$}  {:>9}  {:>9}  {:>9}  {:>10}\n",
            r.model,
            Metric(Some(r.accuracy)).to_string(),
            r.precision.to_string(),
            r.recall.to_string(),
            r.f1.to_string()
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use Label::{NonTable as N, Table as T};

    fn counts(tp: u64, fp: u64, fn_: u64, tn: u64) -> ConfusionCounts {
        ConfusionCounts { tp, fp, fn_, tn }
    }

    #[test]
    fn confusion_examples() {
        assert_eq!(count_confusion(&[T; 5], &[T; 5]).unwrap(), counts(5, 0, 0, 0));
        let gold = [T, T, T, N, N];
        let pred: Vec<Label> = gold.iter().map(|l| l.flip()).collect();
        assert_eq!(count_confusion(&pred, &gold).unwrap(), counts(0, 2, 3, 0));
        assert!(matches!(
            count_confusion(&[T], &[]),
            Err(EvalError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn ten_line_enumeration() {
        let pred = [T, T, N, N, T, N, T, N, N, T];
        let gold = [T, N, N, T, T, N, N, T, N, T];
        let mut expect = counts(0, 0, 0, 0);
        for i in 0..10 {
            match (pred[i], gold[i]) {
                (T, T) => expect.tp += 1,
                (T, N) => expect.fp += 1,
                (N, T) => expect.fn_ += 1,
                (N, N) => expect.tn += 1,
            }
        }
        assert_eq!(expect, counts(3, 2, 2, 3));
        assert_eq!(count_confusion(&pred, &gold).unwrap(), expect);
    }

    #[test]
    fn metrics_hand_case() {
        let r = compute_metrics(counts(3, 1, 2, 4), "d", "m").unwrap();
        assert_eq!(r.accuracy, 0.7);
        assert_eq!(r.precision.0, Some(0.75));
        assert_eq!(r.recall.0, Some(0.6));
        assert!((r.f1.0.unwrap() - 0.6667).abs() < 1e-4);
    }

    #[test]
    fn undefined_metrics() {
        let r = compute_metrics(counts(0, 0, 5, 5), "d", "m").unwrap();
        assert_eq!(r.accuracy, 0.5);
        assert_eq!(r.precision.0, None);
        assert_eq!(r.f1.0, None);
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains(r#""precision":"n/a""#));
        assert!(json.contains(r#""counts":{"tp":0,"fp":0,"fn":5,"tn":5}"#));
        assert_eq!(serde_json::from_str::<MetricsReport>(&json).unwrap(), r);
        assert_eq!(
            compute_metrics(counts(0, 0, 0, 0), "d", "m"),
            Err(EvalError::EmptyCounts)
        );
        // precision and recall both zero
        assert_eq!(compute_metrics(counts(0, 3, 2, 1), "d", "m").unwrap().f1.0, None);
    }

    #[test]
    fn table_rendering() {
        let mut r = compute_metrics(counts(3, 1, 2, 4), "d", "Heuristics").unwrap();
        r.accuracy = 0.5491;
        r.precision = Metric(Some(0.5946));
        r.recall = Metric(Some(0.3826));
        r.f1 = Metric(Some(0.4656));
        let t = render_table(&[r]);
        let lines: Vec<&str> = t.lines().collect();
        assert_eq!(
            lines[0].split_whitespace().collect::<Vec<_>>(),
            ["Method", "Accuracy", "Precision", "Recall", "F1-measure"]
        );
        assert_eq!(
            lines[1].split_whitespace().collect::<Vec<_>>(),
            ["Heuristics", "0.5491", "0.5946", "0.3826", "0.4656"]
        );
    }

    #[test]
    fn keyed_alignment() {
        let key = |i| LineKey {
            doc_id: "d".into(),
            page: 0,
            line_idx: i,
        };
        let gold = vec![(key(0), T), (key(1), N)];
        let pred = vec![(key(1), T), (key(0), T)];
        assert_eq!(
            count_confusion_keyed(pred, gold.clone()).unwrap(),
            counts(1, 1, 0, 0)
        );
        assert_eq!(
            count_confusion_keyed(vec![(key(0), T)], gold.clone()),
            Err(EvalError::MissingPrediction(key(1)))
        );
        assert_eq!(
            count_confusion_keyed(vec![(key(0), T), (key(1), T), (key(2), N)], gold),
            Err(EvalError::UnexpectedPrediction(key(2)))
        );
    }
}
