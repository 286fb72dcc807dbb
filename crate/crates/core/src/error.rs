use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("line {line}: {reason}")]
    MalformedLine { line: usize, reason: String },

    #[error("invalid class spec: {0}")]
    ClassSpec(String),

    #[error("unknown function label `{0}`")]
    UnknownFunction(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("no tokens to estimate from")]
    EmptyTable,

    #[error("hapax estimator undefined: table has no hapax legomena")]
    NoHapaxes,

    #[error("unseen form `{0}`")]
    UnseenForm(String),

    #[error("paired t-test undefined: differences are constant and nonzero (infinite t)")]
    InfiniteT,

    #[error("zero denominator in {which} ratio")]
    ZeroDenominator { which: &'static str },

    #[error("fold {fold}: {source}")]
    Fold {
        fold: usize,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn in_fold(self, fold: usize) -> Self {
        match self {
            e @ Error::Fold { .. } => e,
            e => Error::Fold {
                fold,
                source: Box::new(e),
            },
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
