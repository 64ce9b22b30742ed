//! Line classifiers: logistic regression, linear SVM, discretized naive
//! Bayes and their majority-vote ensemble.

pub mod ensemble;
pub mod lr;
pub mod nb;
pub mod svm;

use thiserror::Error;

use crate::labels::Label;

pub use ensemble::{majority, EnsembleModel, FeatureConfig, TrainParams, Voter, MODEL_VERSION};
pub use lr::{LrModel, LrParams};
pub use nb::{NbModel, NbParams};
pub use svm::{SvmModel, SvmParams};

#[derive(Debug, Error, PartialEq)]
pub enum TrainError {
    #[error("degenerate training data: {0}")]
    DegenerateData(String),
}

/// Feature rows with their labels.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Dataset {
    pub rows: Vec<Vec<f64>>,
    pub labels: Vec<Label>,
}

impl Dataset {
    pub fn new(rows: Vec<Vec<f64>>, labels: Vec<Label>) -> Self {
        assert_eq!(rows.len(), labels.len(), "rows and labels differ in length");
        Dataset { rows, labels }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn dims(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn positives(&self) -> usize {
        self.labels.iter().filter(|l| l.is_table()).count()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[f64], Label)> {
        self.rows
            .iter()
            .map(Vec::as_slice)
            .zip(self.labels.iter().copied())
    }

    /// Non-empty, rectangular, finite, and containing both classes.
    pub fn check(&self) -> Result<(), TrainError> {
        let degenerate = |m: &str| Err(TrainError::DegenerateData(m.into()));
        if self.is_empty() {
            return degenerate("no examples");
        }
        let d = self.dims();
        if self.rows.iter().any(|r| r.len() != d) {
            return degenerate("rows have different lengths");
        }
        if self.rows.iter().flatten().any(|v| !v.is_finite()) {
            return degenerate("non-finite feature value");
        }
        let pos = self.positives();
        if pos == 0 || pos == self.len() {
            return degenerate("only one class present");
        }
        Ok(())
    }
}

pub(crate) fn dot(w: &[f64], x: &[f64]) -> f64 {
    assert_eq!(w.len(), x.len(), "feature dimension mismatch");
    w.iter().zip(x).map(|(a, b)| a * b).sum()
}
