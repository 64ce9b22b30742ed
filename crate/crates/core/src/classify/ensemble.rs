//! Majority vote over the three members and the persisted model format.

use std::io::{Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{lr, nb, svm, Dataset, LrModel, LrParams, NbModel, NbParams, SvmModel, SvmParams, TrainError};
use crate::features::{FeatureMask, FeatureVector};
use crate::labels::{Label, LabelSource};

pub const MODEL_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FeatureConfig {
    pub step: f64,
    pub mask: FeatureMask,
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(default)]
pub struct TrainParams {
    pub lr: LrParams,
    pub svm: SvmParams,
    pub nb: NbParams,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrainingMetadata {
    pub examples: usize,
    pub positives: usize,
    pub negatives: usize,
    pub params: TrainParams,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnsembleModel {
    pub version: u32,
    pub feature_config: FeatureConfig,
    pub lr: LrModel,
    pub svm: SvmModel,
    pub nb: NbModel,
    pub metadata: TrainingMetadata,
}

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("unsupported model version {0} (expected {MODEL_VERSION})")]
    Version(u32),
    #[error("inconsistent model: {0}")]
    Inconsistent(String),
    #[error("malformed model file: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Voter {
    #[default]
    Ensemble,
    Lr,
    Svm,
    Nb,
}

impl Voter {
    pub fn source(self) -> LabelSource {
        match self {
            Voter::Ensemble => LabelSource::Ensemble,
            Voter::Lr => LabelSource::Lr,
            Voter::Svm => LabelSource::Svm,
            Voter::Nb => LabelSource::Nb,
        }
    }
}

impl std::str::FromStr for Voter {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "ensemble" => Ok(Voter::Ensemble),
            "lr" => Ok(Voter::Lr),
            "svm" => Ok(Voter::Svm),
            "nb" => Ok(Voter::Nb),
            other => Err(format!("unknown voter {other:?} (ensemble, lr, svm, nb)")),
        }
    }
}

/// Label chosen by at least two of three voters.
pub fn majority(votes: [Label; 3]) -> Label {
    let tables = votes.iter().filter(|v| v.is_table()).count();
    Label::from_sign(tables >= 2)
}

impl EnsembleModel {
    /// Trains all members on `rows`, which must already be projected to
    /// `mask`.
    pub fn train(
        data: &Dataset,
        mask: FeatureMask,
        params: &TrainParams,
    ) -> Result<EnsembleModel, TrainError> {
        data.check()?;
        let expected = mask.dims().len();
        if data.dims() != expected {
            return Err(TrainError::DegenerateData(format!(
                "rows have {} dims but feature set {} has {expected}",
                data.dims(),
                mask.as_str()
            )));
        }
        let ((lr, svm), nb) = rayon::join(
            || rayon::join(|| lr::train(data, &params.lr), || svm::train(data, &params.svm)),
            || nb::train(data, &params.nb),
        );
        let positives = data.positives();
        Ok(EnsembleModel {
            version: MODEL_VERSION,
            feature_config: FeatureConfig {
                step: params.nb.step,
                mask,
            },
            lr: lr?,
            svm: svm?,
            nb: nb?,
            metadata: TrainingMetadata {
                examples: data.len(),
                positives,
                negatives: data.len() - positives,
                params: *params,
            },
        })
    }

    pub fn dims(&self) -> usize {
        self.feature_config.mask.dims().len()
    }

    /// Member votes on a projected row, in the order LR, SVM, NB.
    pub fn votes_row(&self, x: &[f64]) -> [Label; 3] {
        [self.lr.predict(x), self.svm.predict(x), self.nb.predict(x).0]
    }

    pub fn predict_row(&self, x: &[f64], voter: Voter) -> Label {
        match voter {
            Voter::Ensemble => majority(self.votes_row(x)),
            Voter::Lr => self.lr.predict(x),
            Voter::Svm => self.svm.predict(x),
            Voter::Nb => self.nb.predict(x).0,
        }
    }

    pub fn predict(&self, x: &FeatureVector, voter: Voter) -> Label {
        self.predict_row(&self.feature_config.mask.project(x), voter)
    }

    pub fn validate(&self) -> Result<(), ModelError> {
        if self.version != MODEL_VERSION {
            return Err(ModelError::Version(self.version));
        }
        let d = self.dims();
        let bad = |m: String| Err(ModelError::Inconsistent(m));
        if self.lr.theta.len() != d || self.svm.w.len() != d || self.nb.cond.len() != d {
            return bad(format!("member dimensions differ from feature set ({d})"));
        }
        if self.nb.step != self.feature_config.step {
            return bad("naive Bayes step differs from feature_config".into());
        }
        let nbins = nb::num_bins(self.nb.step);
        if self.nb.cond.iter().flatten().any(|t| t.len() != nbins) {
            return bad("naive Bayes table has the wrong number of bins".into());
        }
        let finite = self.lr.theta.iter().chain(&self.svm.w).all(|v| v.is_finite())
            && self.lr.theta0.is_finite()
            && self.svm.b.is_finite();
        if !finite {
            return bad("non-finite weight".into());
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("model serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<EnsembleModel, ModelError> {
        let m: EnsembleModel = serde_json::from_str(s)?;
        m.validate()?;
        Ok(m)
    }

    pub fn read<R: Read>(mut r: R) -> Result<EnsembleModel, ModelError> {
        let mut s = String::new();
        r.read_to_string(&mut s)?;
        Self::from_json(&s)
    }

    pub fn load(path: &Path) -> Result<EnsembleModel, ModelError> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    /// Writes via a temporary file in the same directory and renames it
    /// into place.
    pub fn save(&self, path: &Path) -> Result<(), ModelError> {
        let dir = path
            .parent()
            .filter(|p| !p.as_os_str().is_empty())
            .unwrap_or(Path::new("."));
        let name = path.file_name().and_then(|n| n.to_str()).unwrap_or("model.json");
        let tmp = dir.join(format!(".{name}.{}.tmp", std::process::id()));
        {
            let mut f = std::fs::File::create(&tmp)?;
            f.write_all(self.to_json().as_bytes())?;
            f.sync_all()?;
        }
        std::fs::rename(&tmp, path)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Label::{NonTable as N, Table as T};

    #[test]
    fn majority_table() {
        assert_eq!(majority([T, T, N]), T);
        assert_eq!(majority([N, N, N]), N);
        assert_eq!(majority([T, N, N]), N);
        assert_eq!(majority([N, T, T]), T);
    }

    fn toy() -> Dataset {
        Dataset::new(vec![vec![0.9], vec![0.8], vec![0.1], vec![0.2]], vec![T, T, N, N])
    }

    #[test]
    fn train_and_round_trip() {
        let m = EnsembleModel::train(&toy(), FeatureMask::Nam, &TrainParams::default()).unwrap();
        assert_eq!(m.nb.class_prior, [0.5, 0.5]);
        assert_eq!(m.predict_row(&[0.95], Voter::Ensemble), T);
        assert_eq!(m.predict_row(&[0.05], Voter::Ensemble), N);
        let back = EnsembleModel::from_json(&m.to_json()).unwrap();
        assert_eq!(back, m);
        assert_eq!(back.to_json(), m.to_json());
    }

    #[test]
    fn rejects_dimension_mismatch() {
        assert!(EnsembleModel::train(&toy(), FeatureMask::All, &TrainParams::default()).is_err());
        let mut m = EnsembleModel::train(&toy(), FeatureMask::Nam, &TrainParams::default()).unwrap();
        m.lr.theta.push(0.0);
        assert!(matches!(m.validate(), Err(ModelError::Inconsistent(_))));
        m.lr.theta.pop();
        m.version = 99;
        assert!(matches!(
            EnsembleModel::from_json(&m.to_json()),
            Err(ModelError::Version(99))
        ));
    }

    #[test]
    fn atomic_save() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("model.json");
        let m = EnsembleModel::train(&toy(), FeatureMask::Nam, &TrainParams::default()).unwrap();
        m.save(&p).unwrap();
        assert_eq!(EnsembleModel::load(&p).unwrap(), m);
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    }
}
