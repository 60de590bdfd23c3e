use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Input does not satisfy the invariants of its type.
    #[error("invalid input: {0}")]
    Validation(String),
    /// A routine was called outside its precondition, or an internal
    /// postcondition failed.
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("infeasible configuration: {0}")]
    Infeasible(String),
    #[error("degenerate geometry: {0}")]
    Degenerate(String),
    /// An exhaustive search would exceed its documented budget.
    #[error("refused: parameter `{param}` {reason}")]
    Refused { param: &'static str, reason: String },
    /// An oracle found a counterexample to a proven statement.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("generation failed: {0}")]
    Generation(String),
}

impl Error {
    /// Whether the error reports bad input (as opposed to a failed claim).
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Contract(_) | Error::TheoremViolation(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
