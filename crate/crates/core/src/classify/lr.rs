//! L2-regularized logistic regression fitted by full-batch gradient ascent
//! with a backtracking line search.

use serde::{Deserialize, Serialize};

use super::{dot, Dataset, TrainError};
use crate::labels::Label;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LrModel {
    pub theta: Vec<f64>,
    pub theta0: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct LrParams {
    pub lambda: f64,
    pub max_iters: usize,
    pub tol: f64,
}

impl Default for LrParams {
    fn default() -> Self {
        LrParams {
            lambda: 1e-3,
            max_iters: 500,
            tol: 1e-6,
        }
    }
}

pub fn sigmoid(s: f64) -> f64 {
    if s >= 0.0 {
        1.0 / (1.0 + (-s).exp())
    } else {
        let e = s.exp();
        e / (1.0 + e)
    }
}

/// ln(1 + e^s) without overflow.
fn softplus(s: f64) -> f64 {
    if s > 0.0 {
        s + (-s).exp().ln_1p()
    } else {
        s.exp().ln_1p()
    }
}

impl LrModel {
    pub fn zeros(dims: usize) -> Self {
        LrModel {
            theta: vec![0.0; dims],
            theta0: 0.0,
        }
    }

    pub fn score(&self, x: &[f64]) -> f64 {
        dot(&self.theta, x) + self.theta0
    }

    /// Probability that `x` is a table line.
    pub fn prob(&self, x: &[f64]) -> f64 {
        sigmoid(self.score(x))
    }

    pub fn predict(&self, x: &[f64]) -> Label {
        Label::from_sign(self.prob(x) > 0.5)
    }
}

/// Mean log-likelihood of the data minus `lambda / 2 * |theta|^2`; the bias
/// is not penalized.
pub fn objective(data: &Dataset, model: &LrModel, lambda: f64) -> f64 {
    let ll: f64 = data
        .iter()
        .map(|(x, y)| {
            let s = model.score(x);
            let t = if y.is_table() { 1.0 } else { 0.0 };
            t * s - softplus(s)
        })
        .sum();
    ll / data.len() as f64 - 0.5 * lambda * dot(&model.theta, &model.theta)
}

/// Gradient of [`objective`]; the last entry is the bias component.
pub fn gradient(data: &Dataset, model: &LrModel, lambda: f64) -> Vec<f64> {
    let d = model.theta.len();
    let mut g = vec![0.0; d + 1];
    for (x, y) in data.iter() {
        let t = if y.is_table() { 1.0 } else { 0.0 };
        let r = t - model.prob(x);
        for (gj, xj) in g.iter_mut().zip(x) {
            *gj += r * xj;
        }
        g[d] += r;
    }
    let n = data.len() as f64;
    for (j, gj) in g.iter_mut().enumerate() {
        *gj /= n;
        if j < d {
            *gj -= lambda * model.theta[j];
        }
    }
    g
}

fn step(model: &LrModel, g: &[f64], eta: f64) -> LrModel {
    let d = model.theta.len();
    LrModel {
        theta: model.theta.iter().zip(g).map(|(t, gj)| t + eta * gj).collect(),
        theta0: model.theta0 + eta * g[d],
    }
}

pub fn train(data: &Dataset, params: &LrParams) -> Result<LrModel, TrainError> {
    train_traced(data, params).map(|(m, _)| m)
}

/// Like [`train`], also returning the objective after every iteration.
pub fn train_traced(data: &Dataset, params: &LrParams) -> Result<(LrModel, Vec<f64>), TrainError> {
    data.check()?;
    const ARMIJO: f64 = 1e-4;
    let mut model = LrModel::zeros(data.dims());
    let mut value = objective(data, &model, params.lambda);
    let mut trace = vec![value];
    let mut eta = 1.0;
    for _ in 0..params.max_iters {
        let g = gradient(data, &model, params.lambda);
        if g.iter().all(|v| v.abs() < params.tol) {
            break;
        }
        let g2: f64 = g.iter().map(|v| v * v).sum();
        eta *= 2.0;
        loop {
            let cand = step(&model, &g, eta);
            let v = objective(data, &cand, params.lambda);
            if v >= value + ARMIJO * eta * g2 {
                model = cand;
                value = v;
                break;
            }
            eta *= 0.5;
            if eta < 1e-12 {
                return Ok((model, trace));
            }
        }
        trace.push(value);
    }
    Ok((model, trace))
}
