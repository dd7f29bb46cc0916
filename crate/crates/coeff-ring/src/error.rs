use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("operands disagree: {0}")]
    DimensionMismatch(String),
    #[error("not divisible by (x{i} - x{j}) at degree {degree}")]
    NotDivisible { i: usize, j: usize, degree: u32 },
    #[error("series is not symmetric at degree {0}")]
    NotSymmetric(u32),
    #[error("rho specializes to {0}, which is not a unit")]
    NonUnitRho(String),
    #[error("series has no inverse: constant term {0}")]
    NotInvertible(String),
    #[error("not enough valid degree: need {need}, have {have}")]
    Precision { need: u32, have: u32 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("inconsistent specialization: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, RingError>;
