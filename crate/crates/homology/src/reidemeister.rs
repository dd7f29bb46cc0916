//! Comparing homology of diagrams related by Reidemeister moves.

use crate::complex::build_complex;
use crate::error::Result;
use crate::pd::PdLink;
use crate::table::{homology, HomologyTable};
use coeff_ring::Specialization;
use serde_json::{json, Value};

#[derive(Clone, Debug)]
pub struct ReidemeisterReport {
    pub preset: String,
    pub first: HomologyTable,
    pub second: HomologyTable,
    pub first_difference: Option<String>,
}

impl ReidemeisterReport {
    pub fn equal(&self) -> bool {
        self.first_difference.is_none()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "preset": self.preset,
            "equal": self.equal(),
            "first_difference": self.first_difference,
            "first": self.first.to_json(),
            "second": self.second.to_json(),
        })
    }
}

pub fn homology_of(pd: &PdLink, s: &Specialization) -> Result<HomologyTable> {
    homology(&build_complex(pd, s)?)
}

pub fn reidemeister_check(d1: &PdLink, d2: &PdLink, s: &Specialization) -> Result<ReidemeisterReport> {
    let first = homology_of(d1, s)?;
    let second = homology_of(d2, s)?;
    let first_difference = first.first_difference(&second);
    Ok(ReidemeisterReport { preset: s.name.clone(), first, second, first_difference })
}
