use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed request: unknown ids, out-of-range parameters, mismatched games.
    #[error("invalid input: {0}")]
    Input(String),

    /// A value violates a structural invariant of its type.
    #[error("{rule}: {detail}")]
    Invariant { rule: &'static str, detail: String },

    /// The request would exceed a configured enumeration or size budget.
    #[error("{what} limit exceeded: {actual} > {limit}")]
    Limit {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    /// A construction failed its own self-check against the definitional oracle.
    #[error("validation failed: {0}")]
    Validation(String),

    /// A special-case algorithm was asked to run on a game outside its family.
    #[error("game is not in the {expected} family")]
    WrongFamily { expected: &'static str },
}

impl Error {
    pub(crate) fn invariant(rule: &'static str, detail: impl Into<String>) -> Self {
        Error::Invariant {
            rule,
            detail: detail.into(),
        }
    }

    pub(crate) fn input(detail: impl Into<String>) -> Self {
        Error::Input(detail.into())
    }

    pub fn is_limit(&self) -> bool {
        matches!(self, Error::Limit { .. })
    }
}
