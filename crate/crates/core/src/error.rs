use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degenerate line: the two points coincide")]
    DegenerateLine,
    #[error("coincident consecutive points in a turn")]
    CoincidentPoints,
    #[error("minimum turn undefined: all points are collinear")]
    AllCollinear,
    #[error("invalid instance: {0}")]
    Validation(#[from] crate::instance::ValidationError),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("search cap exceeded: {0}")]
    CapExceeded(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
