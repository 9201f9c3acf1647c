use thiserror::Error;

/// Errors raised by the path, rewriting, lambda and surface modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("endpoint mismatch: {left} is not {right}")]
    EndpointMismatch { left: String, right: String },
    #[error("ill-formed path: {0}")]
    IllFormed(String),
    #[error("not a redex: {0}")]
    NotARedex(String),
    #[error("terms differ at more than one position")]
    NoCommonShape,
    #[error("step limit of {limit} exceeded")]
    StepLimitExceeded { limit: usize },
    #[error("invalid redex site {0}")]
    InvalidSite(String),
    #[error("fuel exhausted after {fuel} steps")]
    FuelExhausted { fuel: usize },
    #[error("unknown surface `{0}`")]
    UnknownSurface(String),
    #[error("generator `{0}` does not belong to the presentation")]
    ForeignGenerator(String),
    #[error("normal form {0} has no canonical reading")]
    NonCanonicalResidue(String),
    #[error("element does not belong to the {0}")]
    WrongSurface(String),
    #[error("elements come from different surfaces ({0} and {1})")]
    SurfaceMismatch(String, String),
    #[error("unknown rule `{0}`")]
    UnknownRule(String),
    #[error("trace step {index} does not replay: {msg}")]
    ReplayMismatch { index: usize, msg: String },
}

impl Error {
    pub(crate) fn syntax(pos: usize, msg: impl Into<String>) -> Self {
        Error::Syntax { pos, msg: msg.into() }
    }

    /// True for errors caused by malformed input text rather than by the
    /// mathematics of the request.
    pub fn is_syntax(&self) -> bool {
        matches!(self, Error::Syntax { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
