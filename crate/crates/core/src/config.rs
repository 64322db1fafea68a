//! Run parameters and the batch file used to rebuild every figure's data.

use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::dataset::{CloudSource, PointFormat};

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read config: {0}")]
    Io(#[from] std::io::Error),
    #[error("cannot parse config: {0}")]
    Parse(String),
    #[error("invalid config: {0}")]
    Invalid(String),
}

/// Parameters shared by the bulk commands.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub threads: usize,
    pub format: PointFormat,
    pub out: PathBuf,
}

impl RunConfig {
    pub fn new(threads: Option<usize>, format: PointFormat, out: PathBuf) -> Result<RunConfig, ConfigError> {
        let threads = match threads {
            Some(0) => return Err(ConfigError::Invalid("thread count must be at least 1".into())),
            Some(t) => t,
            None => std::thread::available_parallelism().map_or(1, |n| n.get()),
        };
        if let Some(dir) = out.parent().filter(|d| !d.as_os_str().is_empty()) {
            if !dir.is_dir() {
                return Err(ConfigError::Invalid(format!(
                    "output directory {} does not exist",
                    dir.display()
                )));
            }
        }
        Ok(RunConfig { threads, format, out })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FigureKind {
    Periodic,
    Preperiodic,
    Teapot,
}

/// One `[[figure]]` stanza.
#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FigureStanza {
    pub name: String,
    pub kind: FigureKind,
    /// Length bound: period for periodic/teapot, preperiod + period otherwise.
    pub max_len: usize,
    #[serde(default = "default_format")]
    pub format: String,
    pub out: PathBuf,
}

fn default_format() -> String {
    "csv".into()
}

impl FigureStanza {
    pub fn source(&self) -> CloudSource {
        match self.kind {
            FigureKind::Periodic => CloudSource::Periodic { max_len: self.max_len },
            FigureKind::Preperiodic => CloudSource::Preperiodic { max_total: self.max_len },
            FigureKind::Teapot => CloudSource::Teapot { max_len: self.max_len },
        }
    }

    pub fn point_format(&self) -> Result<PointFormat, ConfigError> {
        self.format.parse().map_err(|e: crate::dataset::DatasetError| ConfigError::Invalid(e.to_string()))
    }
}

/// Contents of `figures.cfg`.
#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiguresConfig {
    pub threads: Option<usize>,
    #[serde(default)]
    pub figure: Vec<FigureStanza>,
}

impl FiguresConfig {
    pub fn parse(text: &str) -> Result<FiguresConfig, ConfigError> {
        let cfg: FiguresConfig = toml::from_str(text).map_err(|e| ConfigError::Parse(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<FiguresConfig, ConfigError> {
        FiguresConfig::parse(&std::fs::read_to_string(path)?)
    }

    fn validate(&self) -> Result<(), ConfigError> {
        if self.threads == Some(0) {
            return Err(ConfigError::Invalid("threads must be at least 1".into()));
        }
        for f in &self.figure {
            let max = crate::dataset::enumerate::MAX_WORD_LEN;
            if f.max_len > max {
                return Err(ConfigError::Invalid(format!(
                    "figure {}: max_len {} exceeds {max}",
                    f.name, f.max_len
                )));
            }
            f.point_format()?;
        }
        Ok(())
    }
}
