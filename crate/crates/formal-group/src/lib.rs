//! Formal group laws over graded coefficient rings, the series q(x, y) with
//! (x - y) q(x, y) = x [-1] y, logarithms, and divided difference operators.

pub mod divdiff;
pub mod error;
pub mod law;
pub mod log;
pub mod nilhecke;

pub use divdiff::{apply_divided_difference, DividedDiffOp, Mode, OperatorContext};
pub use error::{FglError, Result};
pub use law::{beta, beta_sq, compose1, compositional_inverse, log_symbol, FormalGroupLaw, RingTag};
pub use log::{fgl_log, LogSeries};
pub use nilhecke::{check_nilhecke, monomials, CheckResult, NilHeckeReport};
