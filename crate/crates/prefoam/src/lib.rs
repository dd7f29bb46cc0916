//! Closed GL(2) and GL(N) prefoams: colorings, the deformed evaluation as a
//! power series, the exact GL(2) evaluation in the ground ring, the
//! undeformed evaluation and Kempe-move ratios.

pub mod error;
pub mod eval;
pub mod gl2;
pub mod gln;
pub mod json;
pub mod kempe;
pub mod random;

pub use error::{FoamError, Result};
pub use eval::{eval_deformed_gl2, eval_deformed_gl2_with, eval_exact_gl2, eval_specialized_gl2};
pub use gl2::{enumerate_colorings, euler, ColoringData, DoubleFacet, Gl2Coloring, Gl2Prefoam, Seam, ThinFacet};
pub use gln::{
    elementary, eval_deformed_gln, eval_rw, eval_trivial_p, eval_undeformed_poly, GlNColoring, GlNColoringData, GlNFacet,
    GlNPrefoam, GlNSeam, SignRule,
};
pub use json::{parse_foam, FoamFile};
pub use kempe::{kempe_component, kempe_move, kempe_ratio_check, p_factor, KempeReport};
pub use random::{random_gl2, random_gln};
