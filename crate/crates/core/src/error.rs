use thiserror::Error;

use crate::report::CheckReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown operation name `{0}`")]
    UnknownOp(String),

    #[error("algebra has no `{op}` table (required by {needed_by})")]
    MissingOp { op: &'static str, needed_by: String },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("slot pairs {left:?} and {right:?} must share exactly one slot")]
    Slots { left: (u8, u8), right: (u8, u8) },

    #[error("matrix is singular")]
    Singular,

    #[error("tensor is not {0}")]
    Symmetry(&'static str),

    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },

    #[error("precondition failed: {what}")]
    Precondition {
        what: String,
        report: Option<Box<CheckReport>>,
    },

    #[error("search space of {candidates} candidates exceeds cap {cap}")]
    SearchTooLarge { candidates: u128, cap: u128 },

    #[error("malformed input at {field}: {message}")]
    Format { field: String, message: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn dim(msg: impl Into<String>) -> Self {
        Error::Dimension(msg.into())
    }

    pub(crate) fn format(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Format {
            field: field.into(),
            message: message.into(),
        }
    }

    pub(crate) fn precondition(what: impl Into<String>, report: Option<CheckReport>) -> Self {
        Error::Precondition {
            what: what.into(),
            report: report.map(Box::new),
        }
    }
}
