//! Naive Bayes over equal-width bins of each feature dimension.

use serde::{Deserialize, Serialize};

use super::{Dataset, TrainError};
use crate::labels::Label;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct NbParams {
    pub step: f64,
    /// Laplace smoothing pseudo-count.
    pub alpha: f64,
}

impl Default for NbParams {
    fn default() -> Self {
        NbParams {
            step: 0.2,
            alpha: 1.0,
        }
    }
}

/// Log scores closer than this (relative) count as equal; summing logs can
/// split an exact tie by an ulp.
const TIE_EPS: f64 = 1e-12;

/// Probabilities are indexed `[table, non-table]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NbModel {
    pub step: f64,
    pub class_prior: [f64; 2],
    /// `cond[dim][class][bin - 1]`.
    pub cond: Vec<[Vec<f64>; 2]>,
}

/// Number of bins covering [0, 1] at the given step.
pub fn num_bins(step: f64) -> usize {
    ((1.0 / step) - 1e-9).ceil().max(1.0) as usize
}

/// One-based bin of `v`; the top edge 1.0 falls in the last bin.
pub fn bin(v: f64, step: f64) -> usize {
    let n = num_bins(step);
    let b = (v / step + 1e-9).floor();
    if b < 0.0 {
        1
    } else {
        (b as usize + 1).min(n)
    }
}

pub fn discretize(x: &[f64], step: f64) -> Vec<usize> {
    x.iter().map(|&v| bin(v, step)).collect()
}

fn class_index(y: Label) -> usize {
    if y.is_table() {
        0
    } else {
        1
    }
}

pub fn train(data: &Dataset, params: &NbParams) -> Result<NbModel, TrainError> {
    data.check()?;
    if !(params.step > 0.0 && params.step <= 1.0) || !(params.alpha > 0.0) {
        return Err(TrainError::DegenerateData(
            "step must be in (0, 1] and alpha positive".into(),
        ));
    }
    let nbins = num_bins(params.step);
    let dims = data.dims();
    let mut class_count = [0usize; 2];
    let mut counts = vec![[vec![0usize; nbins], vec![0usize; nbins]]; dims];
    for (x, y) in data.iter() {
        let c = class_index(y);
        class_count[c] += 1;
        for (d, b) in discretize(x, params.step).into_iter().enumerate() {
            counts[d][c][b - 1] += 1;
        }
    }
    let n = data.len() as f64;
    let a = params.alpha;
    let cond = counts
        .into_iter()
        .map(|per_class| {
            let mut k = 0;
            per_class.map(|bins| {
                let denom = class_count[k] as f64 + a * nbins as f64;
                k += 1;
                bins.into_iter().map(|c| (c as f64 + a) / denom).collect()
            })
        })
        .collect();
    Ok(NbModel {
        step: params.step,
        class_prior: [class_count[0] as f64 / n, class_count[1] as f64 / n],
        cond,
    })
}

impl NbModel {
    /// ln Pr(x | y) Pr(y) for both classes.
    pub fn log_joint(&self, x: &[f64]) -> [f64; 2] {
        assert_eq!(x.len(), self.cond.len(), "feature dimension mismatch");
        let bins = discretize(x, self.step);
        let mut out = [self.class_prior[0].ln(), self.class_prior[1].ln()];
        for (d, b) in bins.into_iter().enumerate() {
            for (c, o) in out.iter_mut().enumerate() {
                *o += self.cond[d][c][b - 1].ln();
            }
        }
        out
    }

    /// Label and posterior probability of the table class.
    /// Ties go to non-table.
    pub fn predict(&self, x: &[f64]) -> (Label, f64) {
        let [pos, neg] = self.log_joint(x);
        let tie = (pos - neg).abs() <= TIE_EPS * pos.abs().max(neg.abs()).max(1.0);
        (Label::from_sign(pos > neg && !tie), posterior(pos, neg))
    }
}

/// Pr(table | x) from the two log joint scores.
pub fn posterior(log_pos: f64, log_neg: f64) -> f64 {
    1.0 / (1.0 + (log_neg - log_pos).exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binning() {
        assert_eq!(bin(0.1, 0.2), 1);
        assert_eq!(bin(0.0, 0.2), 1);
        assert_eq!(bin(0.2, 0.2), 2);
        assert_eq!(bin(0.6, 0.2), 4);
        assert_eq!(bin(0.8, 0.2), 5);
        assert_eq!(bin(1.0, 0.2), 5);
        assert_eq!(bin(0.999, 0.2), 5);
        assert_eq!(num_bins(0.2), 5);
        assert_eq!(num_bins(0.3), 4);
        assert_eq!(num_bins(1.0), 1);
    }

    fn toy() -> Dataset {
        Dataset::new(
            vec![vec![0.1], vec![0.9], vec![0.95], vec![0.5]],
            vec![Label::NonTable, Label::Table, Label::Table, Label::Table],
        )
    }

    #[test]
    fn priors_and_smoothing() {
        let m = train(&toy(), &NbParams::default()).unwrap();
        assert_eq!(m.class_prior, [0.75, 0.25]);
        // bin 1 never seen for the table class: (0 + 1) / (3 + 5)
        assert_eq!(m.cond[0][0][0], 1.0 / 8.0);
        assert_eq!(m.cond[0][0][4], 3.0 / 8.0);
        for per_class in &m.cond {
            for t in per_class {
                assert!((t.iter().sum::<f64>() - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn tie_is_negative() {
        let m = NbModel {
            step: 0.2,
            class_prior: [0.5, 0.5],
            cond: vec![[vec![0.2; 5], vec![0.2; 5]]],
        };
        assert_eq!(m.predict(&[0.3]), (Label::NonTable, 0.5));
    }

    #[test]
    fn tie_split_by_rounding_is_still_a_tie() {
        // joints are 1/2 * 4/6 * 1/6 and 1/2 * 1/6 * 4/6
        let (a, b) = (1.0 / 6.0, 5.0 / 6.0);
        let rows = [[a, a], [a, a], [a, a], [0.5, b], [0.5, b], [0.5, b]];
        let d = Dataset::new(
            rows.iter().map(|r| r.to_vec()).collect(),
            [true, true, true, false, false, false]
                .map(Label::from_sign)
                .to_vec(),
        );
        let m = train(
            &d,
            &NbParams {
                step: 1.0 / 3.0,
                alpha: 1.0,
            },
        )
        .unwrap();
        assert_eq!(m.predict(&[a, b]).0, Label::NonTable);
    }

    #[test]
    fn posterior_normalization() {
        let p = posterior(0.03f64.ln(), 0.01f64.ln());
        assert!((p - 0.75).abs() < 1e-12);
        let c = 7.5f64.ln();
        assert!((posterior(0.03f64.ln() + c, 0.01f64.ln() + c) - p).abs() < 1e-12);
    }

    #[test]
    fn hand_multiplied_posterior() {
        let d = Dataset::new(
            vec![
                vec![0.1, 0.7],
                vec![0.3, 0.9],
                vec![0.5, 0.1],
                vec![0.9, 0.2],
                vec![0.85, 0.0],
                vec![0.15, 0.65],
            ],
            vec![
                Label::Table,
                Label::Table,
                Label::NonTable,
                Label::NonTable,
                Label::NonTable,
                Label::Table,
            ],
        );
        let m = train(&d, &NbParams::default()).unwrap();
        // x = (0.12, 0.95) -> bins (1, 5)
        // table: dim0 bins {1,2,1} -> (2+1)/8; dim1 bins {4,5,4} -> (1+1)/8
        // non-table: dim0 bins {3,5,5} -> 1/8; dim1 bins {1,2,1} -> 1/8
        let pos = 0.5 * (3.0 / 8.0) * (2.0 / 8.0);
        let neg = 0.5 * (1.0 / 8.0) * (1.0 / 8.0);
        let (label, p) = m.predict(&[0.12, 0.95]);
        assert_eq!(label, Label::Table);
        assert!((p - pos / (pos + neg)).abs() < 1e-12);
    }
}
