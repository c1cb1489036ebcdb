//! Error type shared across the crate.

use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("file not found: {path}")]
    FileMissing { path: PathBuf },

    #[error("{path}: row {row}: {detail}")]
    MalformedRow {
        path: PathBuf,
        /// 1-based data row (header excluded).
        row: usize,
        detail: String,
    },

    #[error("{path}: row {row}: non-finite sample value")]
    NonFiniteSample { path: PathBuf, row: usize },

    #[error("{path}: no samples in data section")]
    EmptyRecording { path: PathBuf },

    #[error("invalid band {low_hz}-{high_hz} Hz for sample rate {sample_rate_hz} Hz")]
    InvalidBand {
        low_hz: f64,
        high_hz: f64,
        sample_rate_hz: f64,
    },

    #[error("filter produced a non-finite output sample")]
    NonFiniteOutput,

    #[error("segment [{start_s} s, +{duration_s} s) exceeds recording of {available_s} s")]
    OutOfRange {
        start_s: f64,
        duration_s: f64,
        available_s: f64,
    },

    #[error("signal has zero variance")]
    DegenerateSignal,

    #[error("series of length {len} is shorter than the required {min}")]
    TooShort { len: usize, min: usize },

    #[error("matrix has {rows} rows, need at least {min}")]
    TooFewRows { rows: usize, min: usize },

    #[error("training data must contain both classes")]
    InsufficientClasses,

    #[error("{what} did not converge within {limit} iterations")]
    NoConvergence { what: &'static str, limit: usize },

    #[error("empty training data")]
    EmptyData,

    #[error("input has dimension {found}, model expects {expected}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("too few samples: {detail}")]
    TooFewSamples { detail: String },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("confusion matrix has no entries")]
    EmptyMatrix,

    #[error("invalid configuration: {detail}")]
    InvalidConfig { detail: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
