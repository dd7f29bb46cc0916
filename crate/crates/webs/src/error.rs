use coeff_ring::RingError;
use prefoam::FoamError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WebError {
    #[error("web element {id}: {msg}")]
    Invalid { id: String, msg: String },
    #[error("rotation system is not planar: {0}")]
    NotPlanar(String),
    #[error("move {step}: {msg}")]
    BadMove { step: usize, msg: String },
    #[error("boundary webs do not match: {0}")]
    BoundaryMismatch(String),
    #[error("incompatible orientations along a seam: {0}")]
    Orientation(String),
    #[error("web cannot be reduced: {0}")]
    NonReducible(String),
    #[error("Gram matrix is not invertible over R (determinant {0})")]
    NonInvertibleGram(String),
    #[error("inexact division in elimination: {0}")]
    InexactDivision(String),
    #[error("linear system has no solution over R")]
    NoSolution,
    #[error(transparent)]
    Foam(#[from] FoamError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("json: {0}")]
    Json(String),
}

impl WebError {
    pub(crate) fn invalid(id: impl ToString, msg: impl Into<String>) -> Self {
        WebError::Invalid { id: id.to_string(), msg: msg.into() }
    }
}

impl From<serde_json::Error> for WebError {
    fn from(e: serde_json::Error) -> Self {
        WebError::Json(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, WebError>;
