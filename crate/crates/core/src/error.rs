use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("clip too short: {samples} samples, need at least {window}")]
    ClipTooShort { samples: usize, window: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("midi note out of range: {0}")]
    MidiOutOfRange(u32),

    #[error("class {0} has no samples")]
    EmptyClass(usize),

    #[error("degenerate binary problem: all labels have the same sign")]
    DegenerateBinaryProblem,

    #[error("optimization diverged: {0}")]
    NonFiniteObjective(String),

    #[error("not an SDLM file")]
    NotSdlmFile,

    #[error("unsupported version {0}")]
    UnsupportedVersion(u32),

    #[error("invalid container: {0}")]
    InvalidContainer(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("header encoding: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
