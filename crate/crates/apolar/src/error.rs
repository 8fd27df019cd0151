use thiserror::Error;

/// Errors raised by contract violations and malformed input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("variable splits do not match")]
    SplitMismatch,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("polynomial is not bihomogeneous")]
    NotBihomogeneous,
    #[error("the zero polynomial has no Artinian Gorenstein presentation")]
    ZeroPolynomial,
    #[error("{0}")]
    Contract(String),
    #[error("parse error at {line}:{col}: {message}")]
    Parse {
        line: usize,
        col: usize,
        message: String,
    },
}

impl Error {
    pub fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
