//! Exact graded arithmetic: coefficient polynomials in the b_{k,l}, truncated
//! power series, symmetric rewriting and the ground ring R.

pub mod beta;
pub mod error;
pub mod ground;
pub mod mpoly;
pub mod pseries;
pub mod series;
pub mod specialization;
pub mod symmetric;

pub use beta::{BetaMono, CoeffPoly};
pub use error::{Result, RingError};
pub use ground::{GroundRingElem, GroundTarget, SeriesGenerators};
pub use mpoly::MPoly;
pub use pseries::PSeries;
pub use series::TruncSeries;
pub use specialization::Specialization;
pub use symmetric::{to_elementary_symmetric, EPoly};

/// Default truncation degree.
pub const DEFAULT_TRUNC: u32 = 16;

/// Truncation from `FOAMCALC_TRUNC`, falling back to the default.
pub fn default_trunc() -> u32 {
    std::env::var("FOAMCALC_TRUNC").ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_TRUNC)
}
