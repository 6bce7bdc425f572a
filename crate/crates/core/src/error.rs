use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("truncation degree {requested} exceeds operand cap {available}")]
    CapTooLarge { requested: usize, available: usize },

    #[error("monomial exponent must be non-zero")]
    ZeroExponent,

    #[error("expected a polynomial of degree at most {degree}, found a non-zero coefficient in degree {found}")]
    NotPolynomial { degree: usize, found: usize },

    #[error("polynomial division by {divisor} is not exact")]
    InexactDivision { divisor: String },

    #[error("{0}")]
    Inadmissible(String),

    #[error("unknown {kind} `{name}` (known: {known})")]
    Unknown {
        kind: &'static str,
        name: String,
        known: String,
    },

    #[error("missing parameter --{0}")]
    MissingParameter(&'static str),
}

impl Error {
    /// True for failures that indicate a bug upstream rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::NotPolynomial { .. } | Error::InexactDivision { .. } | Error::CapTooLarge { .. }
        )
    }

    pub(crate) fn inadmissible(msg: impl Into<String>) -> Self {
        Error::Inadmissible(msg.into())
    }
}
