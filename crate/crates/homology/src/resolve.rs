//! Complete resolutions of a diagram into webs with canonical ids.
//!
//! Crossing c resolves either into its oriented smoothing or into the web
//! with a double edge, merge vertex 2c and split vertex 2c + 1. A thin edge
//! takes the smallest PD label it runs through; double edges and
//! crossingless circles get ids above every label. Resolutions that agree
//! away from a crossing therefore agree as webs, and the saddle between
//! them can be written with matching ids.

use crate::error::{HomologyError, Result};
use crate::pd::PdLink;
use std::collections::{BTreeMap, BTreeSet};
use webs::{Edge, FoamMovie, Move, Vertex, VertexKind, Web};

#[derive(Clone, Debug)]
pub struct Resolution {
    /// Cube coordinates; true is the 1-resolution.
    pub mu: Vec<bool>,
    pub web: Web,
    /// Web edge carrying each PD label.
    pub edge_of: BTreeMap<usize, usize>,
}

/// Whether crossing c is resolved with a double edge at coordinate `bit`.
/// Positive crossings have the oriented smoothing at 0, negative ones at 1.
pub fn is_h(pd: &PdLink, c: usize, bit: bool) -> bool {
    bit == pd.crossings[c].positive
}

fn id_base(pd: &PdLink) -> usize {
    pd.max_label() + 1
}

pub fn double_id(pd: &PdLink, c: usize) -> usize {
    id_base(pd) + c
}

fn spare_id(pd: &PdLink) -> usize {
    id_base(pd) + pd.len() + pd.loops
}

pub fn resolve(pd: &PdLink, mu: &[bool]) -> Result<Resolution> {
    if mu.len() != pd.len() {
        return Err(HomologyError::Cube(format!("{} coordinates for {} crossings", mu.len(), pd.len())));
    }
    let ends = pd.segment_ends();
    let h: Vec<bool> = (0..pd.len()).map(|c| is_h(pd, c, mu[c])).collect();
    // continuation of a label through an oriented smoothing
    let next = |s: usize| -> Option<usize> {
        let (c, slot) = ends[&s].1;
        if h[c] {
            return None;
        }
        let x = &pd.crossings[c];
        let (_, out) = x.oriented_pairs().into_iter().find(|p| p.0 == slot).expect("incoming slot");
        Some(x.x[out])
    };
    let mut chains: Vec<(Vec<usize>, bool)> = Vec::new();
    let mut seen = BTreeSet::new();
    for (&s, &((c, _), _)) in &ends {
        if !h[c] {
            continue;
        }
        let mut chain = vec![s];
        let mut cur = s;
        while let Some(n) = next(cur) {
            chain.push(n);
            cur = n;
        }
        seen.extend(chain.iter().copied());
        chains.push((chain, false));
    }
    for &s in ends.keys() {
        if seen.contains(&s) {
            continue;
        }
        let mut chain = vec![s];
        let mut cur = next(s).expect("closed chain");
        while cur != s {
            chain.push(cur);
            cur = next(cur).expect("closed chain");
        }
        seen.extend(chain.iter().copied());
        chains.push((chain, true));
    }
    let mut web = Web::new();
    let mut edge_of = BTreeMap::new();
    for (chain, closed) in &chains {
        let id = *chain.iter().min().expect("nonempty chain");
        let edge = if *closed {
            Edge::thin()
        } else {
            let tail = ends[&chain[0]].0 .0;
            let head = ends[chain.last().expect("nonempty chain")].1 .0;
            Edge { thickness: 1, tail: Some(2 * tail + 1), head: Some(2 * head) }
        };
        web.edges.insert(id, edge);
        for &s in chain {
            edge_of.insert(s, id);
        }
    }
    for k in 0..pd.loops {
        web.edges.insert(id_base(pd) + pd.len() + k, Edge::thin());
    }
    for (c, x) in pd.crossings.iter().enumerate() {
        if !h[c] {
            continue;
        }
        let d = double_id(pd, c);
        let [ml, mr, sl, sr] = x.h_slots().map(|slot| edge_of[&x.x[slot]]);
        web.edges.insert(d, Edge { thickness: 2, tail: Some(2 * c), head: Some(2 * c + 1) });
        web.vertices.insert(2 * c, Vertex { kind: VertexKind::Merge, left: ml, right: mr, double: d });
        web.vertices.insert(2 * c + 1, Vertex { kind: VertexKind::Split, left: sl, right: sr, double: d });
    }
    web.validate()?;
    Ok(Resolution { mu: mu.to_vec(), web, edge_of })
}

/// All 2^n resolutions; bit c of the index is the coordinate of crossing c.
pub fn resolutions(pd: &PdLink) -> Result<Vec<Resolution>> {
    pd.validate()?;
    let n = pd.len();
    (0..1usize << n).map(|m| resolve(pd, &mask_to_mu(m, n))).collect()
}

pub fn mask_to_mu(mask: usize, n: usize) -> Vec<bool> {
    (0..n).map(|c| (mask >> c) & 1 == 1).collect()
}

/// The singular saddle from the resolution with crossing c at 0 to the one
/// with c at 1: a zip for a positive crossing, an unzip for a negative one.
pub fn saddle(pd: &PdLink, from: &Resolution, to: &Resolution, c: usize) -> Result<FoamMovie> {
    let x = &pd.crossings[c];
    let lab = |slot: usize| x.x[slot];
    let mv = if x.positive {
        Move::Zip {
            left: from.edge_of[&lab(3)],
            right: from.edge_of[&lab(0)],
            merge: 2 * c,
            split: 2 * c + 1,
            double: double_id(pd, c),
            out: [to.edge_of[&lab(3)], to.edge_of[&lab(2)], to.edge_of[&lab(0)], to.edge_of[&lab(1)]],
        }
    } else {
        let (a, b) = (to.edge_of[&lab(0)], to.edge_of[&lab(1)]);
        Move::Unzip { merge: 2 * c, split: 2 * c + 1, out: [a, if a == b { spare_id(pd) } else { b }] }
    };
    let f = FoamMovie::from_moves(from.web.clone(), vec![mv])?;
    if f.end()? != to.web {
        return Err(HomologyError::Cube(format!("saddle at crossing {c} misses the canonical resolution")));
    }
    Ok(f)
}
