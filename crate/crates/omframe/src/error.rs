use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors raised by the library.
///
/// Every variant carries a stable short code (see [`Error::code`]) that the
/// command-line front end prints and embeds in its output documents.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gcd of zero vector undefined")]
    ZeroVector,
    #[error("input vector must have length n > 1 (got {0})")]
    TooShort(usize),
    #[error("degree bound violated: degree {degree} exceeds bound {bound}")]
    DegreeBound { degree: usize, bound: usize },
    #[error("coefficient vector of length {len} is not divisible by {m}")]
    NotDivisible { len: usize, m: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("requires gcd 1")]
    GcdNotOne,
    #[error("components linearly dependent over the field; EOMF undefined")]
    DependentComponents,
    #[error("no constants k found making the first two entries coprime after {0} attempts")]
    SearchExhausted(usize),
    #[error("invalid witness parameters: {0}")]
    InvalidWitness(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("syntax error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("malformed document: {0}")]
    Document(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::ZeroVector => "E001",
            Error::TooShort(_) => "E002",
            Error::DegreeBound { .. } => "E003",
            Error::NotDivisible { .. } => "E004",
            Error::Dimension(_) => "E005",
            Error::GcdNotOne => "E006",
            Error::DependentComponents => "E007",
            Error::SearchExhausted(_) => "E008",
            Error::InvalidWitness(_) => "E009",
            Error::InvalidField(_) => "E010",
            Error::Parse { .. } => "E011",
            Error::Document(_) => "E012",
        }
    }
}
