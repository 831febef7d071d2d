use thiserror::Error;

/// Errors surfaced by every fallible operation in the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("resource cap exceeded: {cap} (limit {limit}, required {required})")]
    ResourceCap {
        cap: &'static str,
        limit: u64,
        required: u64,
    },

    #[error("unsupported projective plane order {0}: only prime orders are constructed")]
    UnsupportedOrder(u64),

    #[error("certificate invalid at ({i}, {j}): {reason}")]
    CertificateInvalid { i: usize, j: usize, reason: String },

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}
