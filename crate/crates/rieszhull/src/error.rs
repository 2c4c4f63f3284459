use thiserror::Error;

/// Error taxonomy shared by the library and the CLI.
///
/// `Invariant` is reserved for violations of properties that hold by theorem;
/// seeing one means there is a bug, not bad input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("PARSE: {0}")]
    Parse(String),
    #[error("DOMAIN: {0}")]
    Domain(String),
    #[error("NOT_IN_HULL: {0}")]
    NotInHull(String),
    #[error("NOT_HOM: {0}")]
    NotHom(String),
    #[error("INVARIANT: {0}")]
    Invariant(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse(_) => "PARSE",
            Error::Domain(_) => "DOMAIN",
            Error::NotInHull(_) => "NOT_IN_HULL",
            Error::NotHom(_) => "NOT_HOM",
            Error::Invariant(_) => "INVARIANT",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
