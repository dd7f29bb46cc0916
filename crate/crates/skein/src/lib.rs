//! Skein relations of deformed GL(2) foam evaluation. Every relation is a
//! list of variants; each variant is checked extensionally by closing both
//! sides with a fixed family of closures and comparing evaluations in R.

pub mod closure;
pub mod error;
pub mod gamma;
pub mod oracle;
pub mod relation;
pub mod tube;
pub mod verify;

pub use closure::{closure_family, Closure};
pub use error::{Result, SkeinError};
pub use gamma::{gamma_instances, modify, modify_pair, Arc, GammaInstance};
pub use oracle::{closed_form_oracle, Descriptor};
pub use relation::{all_relations, relation, Patch, RelationId, SkeinRelation, Term, Variant};
pub use verify::{verify_all, verify_relation, verify_relation_with, CaseReport, RelationReport};
