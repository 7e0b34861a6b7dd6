use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),

    #[error("the language is empty")]
    EmptyLanguage,

    #[error("element {0} is not in the lattice")]
    ElementNotInLattice(String),

    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },

    #[error("json: {0}")]
    Json(String),
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
