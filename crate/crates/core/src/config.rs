//! Run configuration from a TOML file. Command-line flags override file
//! values, which override built-in defaults.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify::{LrParams, NbParams, SvmParams, TrainParams};
use crate::features::{FeatureMask, NeTagger};
use crate::layout::LayoutConfig;
use crate::weak::WeakLabelConfig;

pub const CONFIG_ENV: &str = "TABLESCOUT_CONFIG";

#[derive(Debug, Error)]
pub enum ConfigFileError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse {
        path: PathBuf,
        #[source]
        source: toml::de::Error,
    },
}

/// Gazetteer files, one name per line. Relative paths resolve against the
/// config file's directory.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Gazetteers {
    pub persons: Option<PathBuf>,
    pub locations: Option<PathBuf>,
    pub organizations: Option<PathBuf>,
}

impl Gazetteers {
    pub fn is_empty(&self) -> bool {
        self.persons.is_none() && self.locations.is_none() && self.organizations.is_none()
    }

    pub fn load(&self) -> std::io::Result<NeTagger> {
        NeTagger::from_files(
            self.persons.as_deref(),
            self.locations.as_deref(),
            self.organizations.as_deref(),
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub jobs: Option<usize>,
    pub features: Option<FeatureMask>,
    pub layout: LayoutConfig,
    pub weak: WeakLabelConfig,
    pub lr: LrParams,
    pub svm: SvmParams,
    pub nb: NbParams,
    pub gazetteers: Gazetteers,
}

impl Config {
    pub fn parse(text: &str, path: &Path) -> Result<Config, ConfigFileError> {
        let mut cfg: Config = toml::from_str(text).map_err(|source| ConfigFileError::Parse {
            path: path.to_owned(),
            source,
        })?;
        let base = path.parent().unwrap_or(Path::new(""));
        for p in [
            &mut cfg.gazetteers.persons,
            &mut cfg.gazetteers.locations,
            &mut cfg.gazetteers.organizations,
        ]
        .into_iter()
        .flatten()
        {
            if p.is_relative() {
                *p = base.join(&*p);
            }
        }
        Ok(cfg)
    }

    pub fn train_params(&self) -> TrainParams {
        TrainParams {
            lr: self.lr,
            svm: self.svm,
            nb: self.nb,
        }
    }

    pub fn load(path: &Path) -> Result<Config, ConfigFileError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigFileError::Io {
            path: path.to_owned(),
            source,
        })?;
        Config::parse(&text, path)
    }

    /// The explicit path if given, else `$TABLESCOUT_CONFIG`, else defaults.
    pub fn resolve(explicit: Option<&Path>) -> Result<Config, ConfigFileError> {
        match explicit {
            Some(p) => Config::load(p),
            None => match std::env::var_os(CONFIG_ENV) {
                Some(p) if !p.is_empty() => Config::load(Path::new(&p)),
                _ => Ok(Config::default()),
            },
        }
    }
}
