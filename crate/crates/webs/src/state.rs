//! State spaces of webs via the universal construction.

use crate::error::{Result, WebError};
use crate::laurent::Laurent;
use crate::linalg::{self, Matrix};
use crate::movie::FoamMovie;
use crate::reduce::{reduce_web, Reduction};
use crate::trace::compose_and_close;
use crate::web::Web;
use coeff_ring::GroundRingElem;
use rayon::prelude::*;
use serde_json::{json, Value};

#[derive(Clone, Debug)]
pub struct StateSpace {
    pub web: Web,
    /// Foams from the empty web to `web`.
    pub basis: Vec<FoamMovie>,
    /// Their reflections, from `web` to the empty web.
    pub duals: Vec<FoamMovie>,
    pub degrees: Vec<i64>,
    pub dots: Vec<Vec<u32>>,
    pub gram: Matrix,
    pub reduction: Reduction,
}

/// (q + q^{-1})^m for m thin components.
pub fn moy_rank(w: &Web) -> Result<Laurent> {
    w.validate()?;
    Ok(Laurent::quantum_two().pow(w.thin_components() as u32))
}

/// Evaluate every closed foam `left_j` followed by `right_i`, as a matrix
/// indexed (i, j).
pub fn pairing(lefts: &[FoamMovie], middle: Option<&FoamMovie>, rights: &[FoamMovie]) -> Result<Matrix> {
    let cells: Vec<(usize, usize)> = (0..rights.len()).flat_map(|i| (0..lefts.len()).map(move |j| (i, j))).collect();
    let vals: Vec<Result<GroundRingElem>> = cells
        .par_iter()
        .map(|&(i, j)| {
            let mut parts = vec![lefts[j].clone()];
            parts.extend(middle.cloned());
            parts.push(rights[i].clone());
            compose_and_close(&parts)?.eval()
        })
        .collect();
    let mut m = linalg::zeros(rights.len(), lefts.len());
    for ((i, j), v) in cells.into_iter().zip(vals) {
        m[i][j] = v?;
    }
    Ok(m)
}

pub fn state_space_basis(w: &Web) -> Result<StateSpace> {
    let reduction = reduce_web(w)?;
    let m = reduction.circles();
    let mut basis = Vec::new();
    let mut duals = Vec::new();
    let mut degrees = Vec::new();
    let mut dots = Vec::new();
    for mask in 0..(1usize << m) {
        // the first capped circle is the most significant digit
        let d: Vec<u32> = (0..m).map(|k| ((mask >> (m - 1 - k)) & 1) as u32).collect();
        let cap = reduction.cap_movie(&d)?;
        let cup = cap.reverse()?;
        degrees.push(cup.degree());
        basis.push(cup);
        duals.push(cap);
        dots.push(d);
    }
    let gram = pairing(&basis, None, &duals)?;
    Ok(StateSpace { web: w.clone(), basis, duals, degrees, dots, gram, reduction })
}

impl StateSpace {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn graded_rank(&self) -> Laurent {
        let mut l = Laurent::zero();
        for &d in &self.degrees {
            l.add_term(d, 1);
        }
        l
    }

    pub fn gram_det(&self) -> Result<GroundRingElem> {
        linalg::det(&self.gram)
    }

    /// Coordinates of the element represented by a foam from the empty web.
    pub fn coordinates(&self, g: &FoamMovie) -> Result<Vec<GroundRingElem>> {
        let p = pairing(std::slice::from_ref(g), None, &self.duals)?;
        let x = linalg::solve(&self.gram, &p)?;
        Ok(x.into_iter().map(|mut r| r.remove(0)).collect())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "web": self.web.to_json(),
            "rank": self.rank(),
            "graded_rank": self.graded_rank().to_string(),
            "degrees": self.degrees,
            "dots": self.dots,
            "gram": linalg::to_json(&self.gram),
            "reduction": self.reduction.to_json(),
        })
    }
}

/// Matrix of the map induced by `f` in the bases of `dom` and `cod`:
/// M = Gram(cod)^{-1} P with P_ij the closure of dom_j, f and the dual of cod_i.
pub fn foam_map_matrix(f: &FoamMovie, dom: &StateSpace, cod: &StateSpace) -> Result<Matrix> {
    if f.start != dom.web {
        return Err(WebError::BoundaryMismatch("movie does not start at the domain web".into()));
    }
    if f.end()? != cod.web {
        return Err(WebError::BoundaryMismatch("movie does not end at the codomain web".into()));
    }
    let p = pairing(&dom.basis, Some(f), &cod.duals)?;
    linalg::solve(&cod.gram, &p)
}
