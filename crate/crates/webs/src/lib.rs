//! GL(2) webs and foams between them. Foams with boundary are movies of
//! elementary moves; closing a movie gives a prefoam that the `prefoam`
//! crate evaluates. State spaces come from the universal construction,
//! with bases read off a reduction of the web to the empty web.

pub mod corpus;
pub mod error;
pub mod laurent;
pub mod linalg;
pub mod movie;
pub mod random;
pub mod reduce;
pub mod state;
pub mod trace;
pub mod web;

pub use error::{Result, WebError};
pub use laurent::Laurent;
pub use linalg::Matrix;
pub use movie::{FoamMovie, Move, MovieBuilder};
pub use reduce::{reduce_web, Reduction, ReductionStep, StepKind};
pub use state::{foam_map_matrix, moy_rank, pairing, state_space_basis, StateSpace};
pub use trace::{close, compose_and_close, eval_closed, ClosedFoam};
pub use web::{Edge, Vertex, VertexKind, Web};
