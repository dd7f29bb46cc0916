//! Extensional verification: close both sides, evaluate, compare.

use crate::closure::{closure_family, Closure};
use crate::error::{Result, SkeinError};
use crate::relation::{Patch, RelationId, SkeinRelation, Term, Variant};
use coeff_ring::GroundRingElem;
use prefoam::{eval_exact_gl2, FoamError};
use rayon::prelude::*;
use serde_json::{json, Value};
use webs::{compose_and_close, Web};

#[derive(Clone, Debug)]
pub struct CaseReport {
    pub variant: String,
    pub closure: String,
    pub lhs: GroundRingElem,
    pub rhs: GroundRingElem,
}

impl CaseReport {
    pub fn pass(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn to_json(&self) -> Value {
        json!({
            "variant": self.variant,
            "closure": self.closure,
            "lhs": self.lhs.to_string(),
            "rhs": self.rhs.to_string(),
            "pass": self.pass(),
        })
    }
}

#[derive(Clone, Debug)]
pub struct RelationReport {
    pub id: RelationId,
    pub cases: Vec<CaseReport>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        !self.cases.is_empty() && self.cases.iter().all(CaseReport::pass)
    }

    pub fn failures(&self) -> usize {
        self.cases.iter().filter(|c| !c.pass()).count()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "relation": self.id.name(),
            "passed": self.passed(),
            "cases": self.cases.len(),
            "failures": self.failures(),
            "results": self.cases.iter().map(CaseReport::to_json).collect::<Vec<_>>(),
        })
    }
}

fn eval_term(t: &Term, c: &Closure) -> Result<GroundRingElem> {
    let v = match &t.patch {
        Patch::Movie(m) => compose_and_close(&[c.bottom.clone(), m.clone(), c.top.clone()])?.eval()?,
        Patch::Prefoam(f) => {
            if !c.bottom.moves.is_empty() || !c.top.moves.is_empty() {
                return Err(SkeinError::Closure { name: c.name.clone(), msg: "a closed prefoam takes only the empty closure".into() });
            }
            match eval_exact_gl2(f) {
                Err(FoamError::NotBipartite(_)) => GroundRingElem::zero(),
                other => other?,
            }
        }
    };
    Ok(v.mul(&t.coeff))
}

fn side(terms: &[Term], c: &Closure) -> Result<GroundRingElem> {
    let mut acc = GroundRingElem::zero();
    for t in terms {
        acc = acc.add(&eval_term(t, c)?);
    }
    Ok(acc)
}

fn check(v: &Variant, c: &Closure) -> Result<CaseReport> {
    if c.bottom.end()? != v.boundary || c.top.start != v.boundary {
        return Err(SkeinError::Closure { name: c.name.clone(), msg: "boundary does not match the patch".into() });
    }
    Ok(CaseReport { variant: v.name.clone(), closure: c.name.clone(), lhs: side(&v.lhs, c)?, rhs: side(&v.rhs, c)? })
}

fn run(rel: &SkeinRelation, pairs: Vec<(&Variant, Closure)>) -> Result<RelationReport> {
    if pairs.is_empty() {
        return Err(SkeinError::Closure { name: String::new(), msg: format!("no closure fits {}", rel.id.name()) });
    }
    let cases: Result<Vec<CaseReport>> = pairs.par_iter().map(|(v, c)| check(v, c)).collect();
    Ok(RelationReport { id: rel.id, cases: cases? })
}

/// Every variant against the built-in closure family of its boundary.
pub fn verify_relation(rel: &SkeinRelation) -> Result<RelationReport> {
    let mut pairs = Vec::new();
    for v in &rel.variants {
        for c in closure_family(&v.boundary)? {
            pairs.push((v, c));
        }
    }
    run(rel, pairs)
}

/// Every variant against the given closures that fit its boundary.
pub fn verify_relation_with(rel: &SkeinRelation, closures: &[Closure]) -> Result<RelationReport> {
    let mut pairs = Vec::new();
    for v in &rel.variants {
        for c in closures {
            let fits = c.bottom.end().map(|w: Web| w == v.boundary).unwrap_or(false);
            if fits {
                pairs.push((v, c.clone()));
            }
        }
    }
    run(rel, pairs)
}

pub fn verify_all(ids: &[RelationId]) -> Result<Vec<RelationReport>> {
    ids.iter().map(|&id| verify_relation(&crate::relation::relation(id)?)).collect()
}
