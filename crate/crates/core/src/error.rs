use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BraidError {
    #[error("generator index {0} out of range, a three-anyon qubit has generators 1 and 2")]
    InvalidGenerator(i64),

    #[error("parse error at token {position} ({token:?}): {reason}")]
    Parse {
        /// 1-based index of the offending whitespace-separated token.
        position: usize,
        token: String,
        reason: String,
    },

    #[error("matrix is not unitary (residual {residual:.3e})")]
    NotUnitary { residual: f64 },
}

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("unknown target gate {0:?}")]
    UnknownTarget(String),

    #[error("target matrix is not unitary (residual {residual:.3e})")]
    NonUnitaryTarget { residual: f64 },

    #[error("malformed target file: {0}")]
    TargetFormat(String),

    #[error("invalid search budget: {0}")]
    InvalidBudget(String),

    #[error("bidirectional index would hold {entries} entries, limit is {limit}")]
    IndexTooLarge { entries: u64, limit: u64 },

    #[error("could not start worker pool: {0}")]
    ThreadPool(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
