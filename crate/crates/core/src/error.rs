use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("({i}, {j}) is not a diagonal of a {m}-gon")]
    InvalidChord { i: usize, j: usize, m: usize },

    #[error("invalid labeled polygon: {0}")]
    InvalidPolygon(String),

    #[error("invalid dissection: {0}")]
    InvalidDissection(String),

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("chord class {0} is not part of the dissection")]
    NotInDissection(String),

    /// A configured resource cap was hit. `flag` names the knob that raises it.
    #[error("resource cap exceeded: {what} (raise with {flag})")]
    Budget { what: String, flag: String },

    #[error("precondition failed: {0}")]
    Precondition(String),
}
