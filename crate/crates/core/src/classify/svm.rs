//! Soft-margin linear SVM trained by deterministic stochastic subgradient
//! descent on the primal, returning a suffix-averaged iterate.

use serde::{Deserialize, Serialize};

use super::{dot, Dataset, TrainError};
use crate::labels::Label;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SvmModel {
    pub w: Vec<f64>,
    pub b: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SvmParams {
    /// Weight of the hinge term against `|w|^2 / 2`.
    pub c: f64,
    pub epochs: usize,
}

impl Default for SvmParams {
    fn default() -> Self {
        SvmParams { c: 1.0, epochs: 200 }
    }
}

impl SvmModel {
    pub fn decision(&self, x: &[f64]) -> f64 {
        dot(&self.w, x) + self.b
    }

    pub fn predict(&self, x: &[f64]) -> Label {
        Label::from_sign(self.decision(x) > 0.0)
    }
}

/// `|w|^2 / 2 + C * sum of hinge losses`.
pub fn objective(data: &Dataset, model: &SvmModel, c: f64) -> f64 {
    let hinge: f64 = data
        .iter()
        .map(|(x, y)| (1.0 - y.as_f64() * model.decision(x)).max(0.0))
        .sum();
    0.5 * dot(&model.w, &model.w) + c * hinge
}

pub fn train(data: &Dataset, params: &SvmParams) -> Result<SvmModel, TrainError> {
    data.check()?;
    if !(params.c > 0.0) || params.epochs == 0 {
        return Err(TrainError::DegenerateData(
            "C must be positive and epochs at least 1".into(),
        ));
    }
    let n = data.len();
    let d = data.dims();
    let lambda = 1.0 / (params.c * n as f64);
    let radius = 1.0 / lambda.sqrt();
    let total = params.epochs * n;
    let avg_from = total / 2;

    let mut w = vec![0.0; d];
    let mut b = 0.0;
    let mut w_sum = vec![0.0; d];
    let mut b_sum = 0.0;
    let mut t = 0usize;
    for _ in 0..params.epochs {
        for (x, y) in data.iter() {
            t += 1;
            let eta = 1.0 / (lambda * t as f64);
            let y = y.as_f64();
            let violated = y * (dot(&w, x) + b) < 1.0;
            let shrink = 1.0 - eta * lambda;
            for wj in w.iter_mut() {
                *wj *= shrink;
            }
            if violated {
                for (wj, xj) in w.iter_mut().zip(x) {
                    *wj += eta * y * xj;
                }
                b += eta * y;
            }
            let norm = dot(&w, &w).sqrt();
            if norm > radius {
                let s = radius / norm;
                for wj in w.iter_mut() {
                    *wj *= s;
                }
            }
            if t > avg_from {
                for (s, wj) in w_sum.iter_mut().zip(&w) {
                    *s += wj;
                }
                b_sum += b;
            }
        }
    }
    let k = (total - avg_from) as f64;
    Ok(SvmModel {
        w: w_sum.into_iter().map(|s| s / k).collect(),
        b: b_sum / k,
    })
}
