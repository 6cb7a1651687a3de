use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed group element: {0}")]
    MalformedElement(String),

    #[error("exponent {exponent} out of range for element order {order}")]
    ExponentOutOfRange { exponent: u64, order: u64 },

    #[error("invalid branch data: {0}")]
    InvalidBranchData(String),

    #[error("inconsistent atlas: {0}")]
    InconsistentAtlas(String),

    #[error("unsupported restriction from {ambient} to {sub}")]
    UnsupportedRestriction { ambient: String, sub: String },

    #[error("malformed class: {0}")]
    MalformedClass(String),

    #[error("euler oracle entry {location}: {message}")]
    OracleValidation { location: String, message: String },

    #[error("pairing is degenerate on block {0}")]
    DualityFailure(String),

    #[error("atlas integrity: {0}")]
    AtlasIntegrity(String),

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("schema violation at {location}: {message}")]
    Schema { location: String, message: String },

    #[error("invariant violation at {location}: {message}")]
    InvariantViolation { location: String, message: String },

    #[error("dangling label at {location}: {label}")]
    DanglingLabel { location: String, label: String },

    #[error("{0}")]
    Io(String),
}

impl Error {
    pub(crate) fn schema(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Schema {
            location: location.into(),
            message: message.into(),
        }
    }

    pub(crate) fn invariant(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::InvariantViolation {
            location: location.into(),
            message: message.into(),
        }
    }
}
