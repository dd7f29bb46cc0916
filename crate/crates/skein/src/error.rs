use thiserror::Error;

#[derive(Debug, Error)]
pub enum SkeinError {
    #[error(transparent)]
    Web(#[from] webs::WebError),
    #[error(transparent)]
    Foam(#[from] prefoam::FoamError),
    #[error(transparent)]
    Ring(#[from] coeff_ring::RingError),
    #[error("malformed closure {name}: {msg}")]
    Closure { name: String, msg: String },
    #[error("modification along an arc: {0}")]
    Modification(String),
    #[error("unknown relation {0}")]
    UnknownRelation(String),
    #[error("unsupported descriptor: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, SkeinError>;
