use coeff_ring::RingError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FglError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("malformed formal group law: {0}")]
    Malformed(String),
    #[error("axiom check failed: {0}")]
    Axiom(String),
    #[error("law known to degree {have}, degree {need} requested")]
    Precision { need: u32, have: u32 },
    #[error("root ({0}, {1}) is not a pair i < j inside the variable range")]
    BadRoot(usize, usize),
}

pub type Result<T> = std::result::Result<T, FglError>;
