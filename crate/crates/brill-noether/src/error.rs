use thiserror::Error;

/// Errors reported by the library.
///
/// Precondition violations are deliberately coarse-grained: the message names
/// the violated precondition and the offending values, which is what the CLI
/// prints verbatim (exit code 2) and what tests match on.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A vanishing sequence failed validation (strictness, non-negativity,
    /// length, or degree bound). The message echoes the offending entries.
    #[error("invalid vanishing sequence: {0}")]
    InvalidSequence(String),
    /// An operation was called outside its stated domain.
    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn invalid_sequence(msg: impl Into<String>) -> Self {
        Error::InvalidSequence(msg.into())
    }
}
