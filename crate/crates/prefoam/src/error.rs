use coeff_ring::RingError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FoamError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("facet {id}: {msg}")]
    Invalid { id: String, msg: String },
    #[error("seam graph component containing thin facet {0} admits no proper coloring")]
    NotBipartite(String),
    #[error("Euler characteristic {value} of {surface} is odd")]
    OddEuler { surface: String, value: i64 },
    #[error("flow condition fails at seam {0}")]
    Flow(usize),
    #[error("coloring does not fit the foam: {0}")]
    BadColoring(String),
    #[error("json: {0}")]
    Json(String),
}

impl FoamError {
    pub(crate) fn invalid(id: &str, msg: impl Into<String>) -> Self {
        FoamError::Invalid { id: id.to_string(), msg: msg.into() }
    }
}

impl From<serde_json::Error> for FoamError {
    fn from(e: serde_json::Error) -> Self {
        FoamError::Json(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, FoamError>;
