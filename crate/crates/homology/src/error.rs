use thiserror::Error;

#[derive(Debug, Error)]
pub enum HomologyError {
    #[error("invalid PD code: {0}")]
    InvalidPd(String),
    #[error("rho does not specialize to a unit: {0}")]
    NonUnitRho(String),
    #[error(transparent)]
    Web(#[from] webs::WebError),
    #[error(transparent)]
    Ring(#[from] coeff_ring::RingError),
    #[error("cube: {0}")]
    Cube(String),
}

pub type Result<T> = std::result::Result<T, HomologyError>;
