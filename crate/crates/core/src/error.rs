use thiserror::Error;

use crate::check::Report;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A sampler produced a value outside the carrier of the instance under test.
    #[error("case {case}: element {element} does not belong to {instance}")]
    InputMismatch {
        instance: String,
        case: usize,
        element: String,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("{instance}: unsupported characteristic ({found})")]
    UnsupportedCharacteristic { instance: String, found: String },

    #[error("{instance}: missing capability `{capability}`")]
    CapabilityMissing {
        instance: String,
        capability: &'static str,
    },

    #[error("{instance}: inconsistent instance: {detail}")]
    InconsistentInstance { instance: String, detail: String },

    #[error("invalid descriptor `{descriptor}`: {reason}")]
    Descriptor { descriptor: String, reason: String },

    #[error("census refused: {0}")]
    CensusRefused(String),

    #[error("{instance} is not cancellative: {report}")]
    NonCancellative { instance: String, report: Report },

    #[error("positive cone violation: {report}")]
    ConeViolation { report: Report },

    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },
}

impl Error {
    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}
