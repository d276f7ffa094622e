//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by sizing, statistics, estimation, and I/O operations.
#[derive(Debug, Error)]
pub enum Error {
    /// A vector argument had the wrong number of elements.
    #[error("{what}: expected {expected} values, got {got}")]
    Arity {
        what: &'static str,
        expected: usize,
        got: usize,
    },

    /// An input value violated the operation's domain (e.g. non-positive UCP).
    #[error("domain error: {0}")]
    Domain(String),

    /// Too few observations for the requested statistic.
    #[error("{what} requires at least {needed} observations, got {got}")]
    InsufficientData {
        what: &'static str,
        needed: usize,
        got: usize,
    },

    /// Correlation is undefined because a series is constant.
    #[error("correlation undefined: {0} is constant")]
    UndefinedCorrelation(&'static str),

    /// Least-squares fit is singular (constant predictor).
    #[error("singular fit: predictor series is constant")]
    SingularFit,

    /// Sample size outside the range covered by a critical-value table.
    #[error("{what} supports sample sizes {min}..={max}, got {got}")]
    UnsupportedSize {
        what: &'static str,
        min: usize,
        max: usize,
        got: usize,
    },

    /// A model could not be fitted on the given training data.
    #[error("cannot fit {model}: {reason}")]
    Fit { model: &'static str, reason: String },

    /// A metric's per-item domain requirement failed (e.g. non-positive prediction).
    #[error("{metric} undefined for item(s) {items:?}: {reason}")]
    MetricDomain {
        metric: &'static str,
        items: Vec<String>,
        reason: String,
    },

    /// Baseline is degenerate (zero MAE or zero spread), so SA / effect size is undefined.
    #[error("degenerate baseline: {0}")]
    DegenerateBaseline(String),

    /// A record failed domain validation.
    #[error("invalid record '{id}': {reasons}")]
    InvalidRecord { id: String, reasons: String },

    /// Dataset-level structural problem (duplicate ids, no records).
    #[error("invalid dataset: {0}")]
    InvalidDataset(String),

    /// CSV schema problem: a required column is missing or a header is duplicated.
    #[error("schema error: {0}")]
    Schema(String),

    /// No data row survived validation.
    #[error("empty dataset: {0}")]
    EmptyDataset(String),

    /// Some leave-one-out folds failed to fit and partial results were not allowed.
    #[error("{model}: {count} fold(s) failed to fit (first: {first}); rerun allowing partial folds to keep the rest")]
    FailedFolds {
        model: &'static str,
        count: usize,
        first: String,
    },

    /// Prediction sets passed to a pairwise comparison do not cover the same projects.
    #[error("misaligned prediction sets: {0}")]
    Misaligned(String),

    /// Tag key absent from every record.
    #[error("unknown tag key '{key}'; available keys: {available:?}")]
    UnknownTagKey { key: String, available: Vec<String> },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
