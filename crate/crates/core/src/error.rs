use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    /// The operation is undefined for this input (e.g. g41 = 0 where an affine
    /// boundary point is required).
    #[error("domain error: {0}")]
    Domain(String),

    /// A Heisenberg translation whose vertical coordinate has the wrong parity;
    /// its corner entry would leave the Eisenstein integers.
    #[error("parity error: k = {k} but |tau|^2 = {norm} (they must agree mod 2)")]
    Parity { k: String, norm: String },

    #[error("shape error: {0}")]
    Shape(String),

    #[error("not a member: {0}")]
    NotMember(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("internal error (this is a bug): {0}")]
    Internal(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}
