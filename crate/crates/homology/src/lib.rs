//! Link homology from GL(2) foams: oriented diagrams in PD notation, the
//! cube of resolutions with singular saddle maps, integer complexes under a
//! specialization of the ground ring, and their bigraded homology.
//!
//! Gradings: the cube vertex with k ones sits in homological degree
//! k - n_-, and a basis element of foam degree d there has quantum degree
//! k + n_+ - 2 n_- - d. Zips and unzips have foam degree 1, so the
//! differential preserves the quantum degree whenever the specialization
//! is homogeneous.

pub mod complex;
pub mod corpus;
pub mod cube;
pub mod error;
pub mod euler;
pub mod frobenius;
pub mod pd;
pub mod reidemeister;
pub mod resolve;
pub mod snf;
pub mod table;

pub use complex::{build_complex, from_cube, ChainComplex, Grading};
pub use cube::{Cube, CubeEdge, CubeVertex};
pub use error::{HomologyError, Result};
pub use euler::bracket;
pub use frobenius::khovanov_complex;
pub use pd::{Crossing, PdLink};
pub use reidemeister::{homology_of, reidemeister_check, ReidemeisterReport};
pub use resolve::{resolutions, resolve, Resolution};
pub use table::{homology, Entry, HomologyTable};
