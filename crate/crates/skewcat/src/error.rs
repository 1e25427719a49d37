use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("unknown suite `{0}`; see `skewcat list`")]
    UnknownSuite(String),
    #[error("unknown action `{0}`; see `skewcat list`")]
    UnknownAction(String),
    #[error("no check in suite `{suite}` involves `{action}`")]
    NothingToRun { suite: String, action: String },
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {message}")]
    Format { path: PathBuf, message: String },
    #[error("degenerate probe {0}: no pair of points at finite nonzero distance")]
    DegenerateProbe(String),
    #[error(transparent)]
    Core(#[from] skewcat_core::Error),
    #[error("worker pool: {0}")]
    Workers(String),
}

