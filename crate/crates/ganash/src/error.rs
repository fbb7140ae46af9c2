//! Error types shared across the toolkit.

use std::path::PathBuf;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Tensor or image dimensions do not line up. `context` names the
    /// operation, `detail` names the offending axes.
    #[error("dimension mismatch in {context}: {detail}")]
    Dimension { context: String, detail: String },

    /// Invalid argument or configuration value.
    #[error("validation error: {0}")]
    Validation(String),

    /// A payload does not fit the available embedding capacity.
    #[error("capacity exceeded: required {required} bits, available {available} bits")]
    Capacity { required: usize, available: usize },

    /// Reed-Solomon block could not be corrected.
    #[error("decode failure in block {block}: {reason}")]
    Decode { block: usize, reason: String },

    /// Gradient tape misuse (backward on an untaped tensor, tape already consumed).
    #[error("tape state error: {0}")]
    TapeState(String),

    /// An optimizer update was requested without a gradient for `name`.
    #[error("missing gradient for parameter '{name}'")]
    MissingGradient { name: String },

    /// Weight file header does not match expectations.
    #[error("weight format error: {0}")]
    Format(String),

    /// Weight file ended mid-record or is otherwise unreadable.
    #[error("corrupt weight file: {0}")]
    Corrupt(String),

    /// Pearson correlation of a constant image is undefined.
    #[error("undefined correlation: {0} image has zero variance")]
    UndefinedCorrelation(&'static str),

    /// A loss became non-finite during training.
    #[error("training diverged: {term} is not finite at step {step}")]
    Diverged { term: &'static str, step: u64 },

    #[error("image error for {path}: {reason}")]
    Image { path: PathBuf, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn dimension(context: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Dimension {
            context: context.into(),
            detail: detail.into(),
        }
    }

    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    /// Stable process exit code for this error kind.
    ///
    /// 2 usage/validation, 3 divergence, 4 capacity, 5 decode failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Diverged { .. } => 3,
            Error::Capacity { .. } => 4,
            Error::Decode { .. } => 5,
            _ => 2,
        }
    }
}
