use thiserror::Error;

/// Errors raised when an operation is called outside its domain.
///
/// No operation ever returns a wrong value for out-of-range input; it
/// returns one of these instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{param} = {value} is out of range: expected {expected}")]
    Range {
        param: &'static str,
        value: String,
        expected: &'static str,
    },
    #[error("lemma {lemma}: {reason}")]
    LemmaDomain { lemma: &'static str, reason: String },
}

impl Error {
    pub(crate) fn range(param: &'static str, value: impl ToString, expected: &'static str) -> Self {
        Error::Range {
            param,
            value: value.to_string(),
            expected,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
