use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An enumeration would exceed the configured cap.
    #[error("{what} too large to enumerate: {size} exceeds the cap of {cap}")]
    CapExceeded { what: &'static str, size: String, cap: u64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("bound audit failed: lower bound {lower} ({lower_source}) exceeds upper bound {upper} ({upper_source})")]
    InconsistentBounds {
        lower: String,
        lower_source: String,
        upper: String,
        upper_source: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn cap(what: &'static str, size: impl ToString, cap: u64) -> Self {
        Error::CapExceeded {
            what,
            size: size.to_string(),
            cap,
        }
    }
}
